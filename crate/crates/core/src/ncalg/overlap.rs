use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::element::Element;
use super::presentation::Presentation;
use crate::error::Result;
use crate::par::par_map;

#[derive(Clone, Debug, Default, Serialize)]
pub struct OverlapReport {
    pub overlaps: usize,
    pub probes: usize,
    pub failures: Vec<String>,
}

impl OverlapReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares the two reductions of every three-letter overlap `abc` where
/// rules apply at `ab` and at `bc`, then runs `probes` random associativity
/// checks on normal words of length up to 3.
pub fn overlap_check(p: &Presentation, probes: usize, seed: u64) -> Result<OverlapReport> {
    let rules = p.rule_list();
    let mut triples = Vec::new();
    for &((a, b), _) in &rules {
        for &((b2, c), _) in &rules {
            if b == b2 {
                triples.push((a, b, c));
            }
        }
    }
    let results = par_map(&triples, |&(a, b, c)| -> Result<Option<String>> {
        let left = p.mul(p.rule(a, b).expect("rule"), &Element::letter(c))?;
        let right = p.mul(&Element::letter(a), p.rule(b, c).expect("rule"))?;
        if left == right {
            Ok(None)
        } else {
            Ok(Some(format!(
                "overlap {}: {} != {}",
                p.word_string(&[a, b, c]),
                p.show(&left),
                p.show(&right)
            )))
        }
    });
    let mut report = OverlapReport { overlaps: triples.len(), probes, failures: Vec::new() };
    for r in results {
        if let Some(f) = r? {
            report.failures.push(f);
        }
    }
    if p.ngens() == 0 {
        return Ok(report);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = p.ngens() as u8;
    let words: Vec<[Vec<u8>; 3]> = (0..probes)
        .map(|_| {
            let mut gen = || (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..n)).collect::<Vec<u8>>();
            [gen(), gen(), gen()]
        })
        .collect();
    let results = par_map(&words, |[x, y, z]| -> Result<Option<String>> {
        let a = p.word_nf(x)?;
        let b = p.word_nf(y)?;
        let c = p.word_nf(z)?;
        let l = p.mul(&p.mul(&a, &b)?, &c)?;
        let r = p.mul(&a, &p.mul(&b, &c)?)?;
        if l == r {
            Ok(None)
        } else {
            Ok(Some(format!(
                "associativity ({})({})({})",
                p.word_string(x),
                p.word_string(y),
                p.word_string(z)
            )))
        }
    });
    for r in results {
        if let Some(f) = r? {
            report.failures.push(f);
        }
    }
    Ok(report)
}
