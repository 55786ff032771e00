use std::collections::{BTreeMap, HashMap};

use super::element::{Element, Word};
use super::overlap::overlap_check;
use super::presentation::{Presentation, Skeleton, DEFAULT_STEP_CAP};
use crate::error::{QgwError, Result};
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug)]
pub struct CompileOptions {
    pub probes: usize,
    pub seed: u64,
    pub step_cap: u64,
}

impl Default for CompileOptions {
    fn default() -> Self {
        CompileOptions { probes: 200, seed: 7, step_cap: DEFAULT_STEP_CAP }
    }
}

type Row = BTreeMap<usize, Scalar>;

fn reduce(row: &mut Row, pivots: &[(usize, Row)]) {
    for (col, prow) in pivots {
        if let Some(c) = row.get(col).cloned() {
            for (k, v) in prow {
                let nv = row.get(k).cloned().unwrap_or_else(Scalar::zero) - &(v * &c);
                if nv.is_zero() {
                    row.remove(k);
                } else {
                    row.insert(*k, nv);
                }
            }
        }
    }
}

/// Reduced row echelon form of sparse rows; columns are ordered so that a
/// smaller index is a larger word. Returns (pivot column, monic row) pairs.
fn rref(rows: Vec<Row>) -> Vec<(usize, Row)> {
    let mut pivots: Vec<(usize, Row)> = Vec::new();
    for mut row in rows {
        reduce(&mut row, &pivots);
        let Some((&lead, lc)) = row.iter().next() else { continue };
        let inv = lc.inv().expect("nonzero");
        for v in row.values_mut() {
            *v = &*v * &inv;
        }
        for (_, prow) in pivots.iter_mut() {
            if let Some(c) = prow.get(&lead).cloned() {
                for (k, v) in &row {
                    let nv = prow.get(k).cloned().unwrap_or_else(Scalar::zero) - &(v * &c);
                    if nv.is_zero() {
                        prow.remove(k);
                    } else {
                        prow.insert(*k, nv);
                    }
                }
            }
        }
        pivots.push((lead, row));
    }
    pivots.sort_by_key(|(c, _)| *c);
    pivots
}

/// Orients a set of relations `r = 0` into rewrite rules by eliminating, in
/// each, its largest word in the term order.
pub fn compile_relations(sk: Skeleton, relations: &[Element], opts: CompileOptions) -> Result<Presentation> {
    let base = Presentation::from_skeleton(sk.clone(), opts.step_cap)?;
    let mut normalized = Vec::with_capacity(relations.len());
    for r in relations {
        let nf = base.normal_form(r)?;
        if !nf.is_zero() {
            normalized.push(nf);
        }
    }
    let mut words: Vec<Word> = normalized.iter().flat_map(|e| e.terms().map(|(w, _)| w.clone())).collect();
    words.sort_by(|a, b| base.cmp_words(b, a));
    words.dedup();
    let col: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let rows: Vec<Row> = normalized
        .iter()
        .map(|e| e.terms().map(|(w, c)| (col[w], c.clone())).collect())
        .collect();
    let mut sk = sk;
    for (lead, row) in rref(rows) {
        let lw = &words[lead];
        if lw.len() != 2 {
            return Err(QgwError::NotSolvable(format!(
                "leading word {} of a relation is not quadratic",
                base.word_string(lw)
            )));
        }
        if sk.rules.iter().any(|((a, b), _)| [*a, *b] == lw[..]) {
            return Err(QgwError::NotSolvable(format!("{} solved twice", base.word_string(lw))));
        }
        let rhs = Element::from_terms(
            row.iter().filter(|(k, _)| **k != lead).map(|(k, v)| (words[*k].clone(), -v)),
        );
        sk.rule(lw[0], lw[1], rhs);
    }
    let p = Presentation::from_skeleton(sk, opts.step_cap)?;
    for ((a, b), rhs) in p.rule_list() {
        if !p.is_normal(rhs) {
            return Err(QgwError::NotSolvable(format!(
                "right-hand side of {} is reducible",
                p.word_string(&[a, b])
            )));
        }
    }
    let report = overlap_check(&p, opts.probes, opts.seed)?;
    if !report.ok() {
        return Err(QgwError::ConfluenceFailure(report.failures.join("; ")));
    }
    Ok(p)
}
