//! Named checks with expected verdicts and a deterministic runner producing
//! machine-readable reports.

mod checks;

pub use checks::{registry, DEFAULT_SEED};

use std::fmt::Write as _;
use std::time::Instant;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{QgwError, Result};
use crate::par::par_map;
use crate::report::Report;
use crate::reps::{sample_q, IdentitySet, RepLabel};
use crate::rmatlab::RMatrix;
use crate::stats;

/// Relative tolerance of the numeric reconfirmation.
pub const NUMERIC_TOL: f64 = 1e-9;

/// Parameters shared by every check of a run.
#[derive(Clone, Debug)]
pub struct Context {
    pub seed: u64,
    pub labels: Option<Vec<RepLabel>>,
    pub rmatrix: Option<RMatrix>,
    pub q_spot: Option<Complex64>,
}

impl Default for Context {
    fn default() -> Self {
        Context { seed: DEFAULT_SEED, labels: None, rmatrix: None, q_spot: None }
    }
}

impl Context {
    /// Sample points for numeric reconfirmation: three seeded values plus the optional spot value.
    pub fn numeric_points(&self) -> Vec<Complex64> {
        let mut qs = sample_q(self.seed, 3);
        qs.extend(self.q_spot);
        qs
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expected {
    Pass,
    /// The property is expected not to hold.
    FailOfProperty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

/// What a check produced: exact reports, matrix identities to be confirmed
/// exactly and numerically, and optional human-readable detail.
#[derive(Clone, Debug, Default)]
pub struct Evidence {
    pub reports: Vec<Report>,
    pub sets: Vec<IdentitySet>,
    pub detail: Option<String>,
}

impl Evidence {
    pub fn report(mut self, r: Report) -> Self {
        self.reports.push(r);
        self
    }

    pub fn set(mut self, s: IdentitySet) -> Self {
        self.sets.push(s);
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

impl From<Report> for Evidence {
    fn from(r: Report) -> Self {
        Evidence::default().report(r)
    }
}

impl From<IdentitySet> for Evidence {
    fn from(s: IdentitySet) -> Self {
        Evidence::default().set(s)
    }
}

pub type CheckFn = fn(&Context) -> Result<Evidence>;

#[derive(Clone)]
pub struct CheckDescriptor {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Acceptance group the check belongs to.
    pub criterion: u8,
    pub params: String,
    pub expected: Expected,
    pub run: CheckFn,
}

impl std::fmt::Debug for CheckDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckDescriptor")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .field("criterion", &self.criterion)
            .field("params", &self.params)
            .field("expected", &self.expected)
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub id: String,
    pub anchor: String,
    pub criterion: u8,
    pub expected: Expected,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    pub checked: usize,
    pub exact_ok: bool,
    pub numeric_checked: usize,
    pub numeric_ok: bool,
    pub millis: u64,
    pub steps: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckOutcome {
    pub fn met(&self) -> bool {
        matches!(
            (self.expected, self.verdict),
            (Expected::Pass, Verdict::Pass) | (Expected::FailOfProperty, Verdict::Fail)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub outcomes: Vec<CheckOutcome>,
}

impl SuiteReport {
    /// 0 when every expected verdict is met, 2 on any engine error, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.outcomes.iter().any(|o| o.verdict == Verdict::Error) {
            2
        } else if self.outcomes.iter().all(CheckOutcome::met) {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| QgwError::Format(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let mark = if o.met() { "ok  " } else { "FAIL" };
            let _ = writeln!(
                out,
                "{mark} {:<40} {:?}/{:?} checked={} numeric={} {}ms",
                o.id, o.verdict, o.expected, o.checked, o.numeric_checked, o.millis
            );
            if let Some(d) = &o.detail {
                for line in d.lines() {
                    let _ = writeln!(out, "       {line}");
                }
            }
            if !o.met() {
                if let Some(r) = &o.residual {
                    for line in r.lines() {
                        let _ = writeln!(out, "       {line}");
                    }
                }
            }
        }
        let met = self.outcomes.iter().filter(|o| o.met()).count();
        let _ = writeln!(out, "{met}/{} checks met their expected verdict", self.outcomes.len());
        out
    }
}

/// Descriptors whose id or anchor contains `filter`, case-insensitively.
pub fn list_checks(filter: &str, ctx: &Context) -> Vec<CheckDescriptor> {
    let f = filter.to_lowercase();
    registry(ctx)
        .into_iter()
        .filter(|d| d.id.to_lowercase().contains(&f) || d.anchor.to_lowercase().contains(&f))
        .collect()
}

/// `all`, a comma-separated list of ids, group prefixes such as `ribbon`, or `criterion-N`.
pub fn resolve(suite: &str, ctx: &Context) -> Result<Vec<CheckDescriptor>> {
    let all = registry(ctx);
    let mut picked: Vec<CheckDescriptor> = Vec::new();
    for name in suite.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let matches: Vec<&CheckDescriptor> = if name == "all" {
            all.iter().collect()
        } else if let Some(n) = name.strip_prefix("criterion-").and_then(|n| n.parse::<u8>().ok()) {
            all.iter().filter(|d| d.criterion == n).collect()
        } else {
            let group = format!("{name}/");
            all.iter().filter(|d| d.id == name || d.id.starts_with(&group)).collect()
        };
        if matches.is_empty() {
            return Err(QgwError::UnknownCheck(name.to_string()));
        }
        for d in matches {
            if !picked.iter().any(|p| p.id == d.id) {
                picked.push(d.clone());
            }
        }
    }
    if picked.is_empty() {
        return Err(QgwError::UnknownCheck(suite.to_string()));
    }
    picked.sort_by_key(|d| d.id);
    Ok(picked)
}

fn outcome(d: &CheckDescriptor, ctx: &Context) -> CheckOutcome {
    let start = Instant::now();
    let (res, steps) = stats::measure(|| (d.run)(ctx));
    let millis = start.elapsed().as_millis() as u64;
    let mut o = CheckOutcome {
        id: d.id.to_string(),
        anchor: d.anchor.to_string(),
        criterion: d.criterion,
        expected: d.expected,
        verdict: Verdict::Error,
        residual: None,
        checked: 0,
        exact_ok: false,
        numeric_checked: 0,
        numeric_ok: true,
        millis,
        steps,
        detail: None,
    };
    let ev = match res {
        Ok(ev) => ev,
        Err(e) => {
            o.residual = Some(format!("{}: {e}", d.id));
            return o;
        }
    };
    let mut exact = Report::new(d.id);
    for r in ev.reports {
        exact.absorb(r);
    }
    let qs = ctx.numeric_points();
    let mut numeric = Report::new("numeric");
    for s in &ev.sets {
        exact.absorb(s.exact_report());
        numeric.absorb(s.numeric_report(&qs, NUMERIC_TOL));
    }
    o.checked = exact.checked;
    o.exact_ok = exact.ok();
    o.numeric_checked = numeric.checked;
    o.numeric_ok = numeric.ok();
    o.verdict = if o.exact_ok && o.numeric_ok { Verdict::Pass } else { Verdict::Fail };
    o.residual = exact.first_failure().or(numeric.first_failure()).map(str::to_string);
    o.detail = ev.detail;
    o
}

/// Runs the resolved checks concurrently; outcomes are ordered by id.
pub fn run(suite: &str, ctx: &Context) -> Result<SuiteReport> {
    let checks = resolve(suite, ctx)?;
    let outcomes = par_map(&checks, |d| outcome(d, ctx));
    Ok(SuiteReport { suite: suite.to_string(), seed: ctx.seed, outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters_and_resolution() {
        let ctx = Context::default();
        assert!(list_checks("nosuch", &ctx).is_empty());
        assert_eq!(list_checks("", &ctx).len(), registry(&ctx).len());
        assert!(list_checks("ribbon", &ctx).iter().any(|d| d.id == "ribbon/labels"));
        assert_eq!(resolve("nosuch", &ctx).unwrap_err(), QgwError::UnknownCheck("nosuch".into()));
        let braid = resolve("braid", &ctx).unwrap();
        assert!(braid.len() >= 4 && braid.iter().all(|d| d.id.starts_with("braid/")));
        assert!(resolve("criterion-10", &ctx).unwrap().iter().all(|d| d.criterion == 10));
    }

    #[test]
    fn ids_are_unique_and_every_group_is_populated() {
        let ctx = Context::default();
        let reg = registry(&ctx);
        let mut ids: Vec<_> = reg.iter().map(|d| d.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), reg.len());
        for c in 1..=11 {
            assert!(reg.iter().any(|d| d.criterion == c), "group {c}");
        }
    }

    #[test]
    fn json_round_trip_and_exit_codes() {
        let ctx = Context::default();
        let rep = run("reconstruction/canonical,determinant/not-central", &ctx).unwrap();
        assert_eq!(rep.exit_code(), 0, "{}", rep.to_text());
        assert!(rep.outcomes[0].id < rep.outcomes[1].id);
        let back = SuiteReport::from_json(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
        let mut bad = rep.clone();
        let neg = bad.outcomes.iter().position(|o| o.expected == Expected::FailOfProperty).unwrap();
        assert_eq!(bad.outcomes[neg].verdict, Verdict::Fail);
        bad.outcomes[neg].verdict = Verdict::Pass;
        assert_eq!(bad.exit_code(), 1);
        bad.outcomes[1 - neg].verdict = Verdict::Error;
        assert_eq!(bad.exit_code(), 2);
    }
}
