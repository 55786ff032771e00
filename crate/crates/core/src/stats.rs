//! Per-thread rewrite step accounting.

use std::cell::Cell;

thread_local! {
    static STEPS: Cell<u64> = const { Cell::new(0) };
}

pub fn add_steps(n: u64) {
    STEPS.with(|s| s.set(s.get() + n));
}

/// Steps recorded on the current thread so far.
pub fn steps() -> u64 {
    STEPS.with(|s| s.get())
}

/// Runs `f` and returns its result together with the steps it performed on
/// this thread.
pub fn measure<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let before = steps();
    let out = f();
    (out, steps() - before)
}
