//! Runs the full check catalog once and reports one line per acceptance group.

use std::collections::BTreeMap;
use std::time::Instant;

use qgw_core::suite::{run, CheckOutcome, Context};

/// Wall-clock budget of each group, in seconds.
const BUDGETS: [(u8, &str, u64); 11] = [
    (1, "braid relation and Hecke battery", 5),
    (2, "RLL relations and duality pairings", 10),
    (3, "quasitriangularity on sampled label triples", 30),
    (4, "reconstruction of the Alexander–Conway matrix", 5),
    (5, "ribbon structure at four labels", 30),
    (6, "superization under the generator dictionary", 10),
    (7, "θ isomorphisms", 20),
    (8, "determinant and superdeterminant suite", 10),
    (9, "twisting", 30),
    (10, "q-exterior algebras", 60),
    (11, "engine health and numeric reconfirmation", 60),
];

/// Groups that cannot be met as stated, with the measured reason.
const KNOWN_RED: [(u8, &str); 1] = [(
    4,
    "π⊗π(ℛ) at [1,1] and [0,1] equals the substituted matrix only up to the scalar q^{(m1+m2)(m1−m2−1)}",
)];

fn line(c: u8, name: &str, outs: &[&CheckOutcome], extra_ok: bool, secs: f64, budget: u64) -> bool {
    let ok = extra_ok && outs.iter().all(|o| o.met()) && secs <= budget as f64;
    let checked: usize = outs.iter().map(|o| o.checked).sum();
    let numeric: usize = outs.iter().map(|o| o.numeric_checked).sum();
    println!(
        "criterion {c:>2}: {} {name} ({} checks, {checked} exact, {numeric} numeric, {secs:.2}s of {budget}s)",
        if ok { "PASS" } else { "FAIL" },
        outs.len()
    );
    for o in outs.iter().filter(|o| !o.met()) {
        println!("    unmet {}: {}", o.id, o.residual.as_deref().and_then(|r| r.lines().next()).unwrap_or("verdict mismatch"));
    }
    ok
}

fn main() {
    let ctx = Context::default();
    let start = Instant::now();
    let report = run("all", &ctx).expect("catalog resolves");
    let total = start.elapsed().as_secs_f64();
    let mut groups: BTreeMap<u8, Vec<&CheckOutcome>> = BTreeMap::new();
    for o in &report.outcomes {
        groups.entry(o.criterion).or_default().push(o);
    }
    let mut unexpected = Vec::new();
    for (c, name, budget) in BUDGETS {
        let outs = groups.get(&c).cloned().unwrap_or_default();
        assert!(!outs.is_empty(), "group {c} has no checks");
        let secs = outs.iter().map(|o| o.millis).sum::<u64>() as f64 / 1000.0;
        let extra = if c == 11 {
            // Every exact pass is reconfirmed at the sampled points.
            report.outcomes.iter().all(|o| !o.exact_ok || o.numeric_ok)
                && report.outcomes.iter().filter(|o| o.exact_ok).any(|o| o.numeric_checked > 0)
        } else {
            true
        };
        let ok = line(c, name, &outs, extra, secs, budget);
        match KNOWN_RED.iter().find(|(k, _)| *k == c) {
            Some((_, why)) => {
                println!("    known red: {why}");
                assert!(!ok, "group {c} is listed as red but now passes");
            }
            None if !ok => unexpected.push(c),
            None => {}
        }
    }
    println!("full catalog: {} checks in {total:.2}s", report.outcomes.len());
    assert!(total < 300.0, "catalog took {total:.1}s");
    assert!(unexpected.is_empty(), "unmet groups: {unexpected:?}");
}
