//! Outcome of a verification: how many identities were examined and which failed.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), checked: 0, failures: Vec::new() }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one identity; `residual` is only evaluated on failure.
    pub fn expect(&mut self, holds: bool, residual: impl FnOnce() -> String) {
        self.checked += 1;
        if !holds {
            self.failures.push(residual());
        }
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.checked += 1;
        self.failures.push(msg.into());
    }

    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        let prefix = other.name;
        self.failures.extend(other.failures.into_iter().map(|f| if prefix.is_empty() { f } else { format!("{prefix}: {f}") }));
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.failures.first().map(|s| s.as_str())
    }
}
