//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature, work is spread over the rayon pool.
//! Rewrite steps performed on worker threads are credited back to the caller.

/// Maps `f` over `items` in order, sequentially.
pub fn seq_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Maps `f` over `items`, preserving order.
#[cfg(feature = "parallel")]
pub fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    let caller = std::thread::current().id();
    let out: Vec<(R, u64)> = items
        .par_iter()
        .map(|x| {
            let (r, s) = crate::stats::measure(|| f(x));
            let foreign = std::thread::current().id() != caller;
            (r, if foreign { s } else { 0 })
        })
        .collect();
    let mut res = Vec::with_capacity(out.len());
    let mut foreign_steps = 0;
    for (r, s) in out {
        foreign_steps += s;
        res.push(r);
    }
    crate::stats::add_steps(foreign_steps);
    res
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    seq_map(items, f)
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
