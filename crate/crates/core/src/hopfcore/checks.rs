use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::HopfData;
use crate::error::Result;
use crate::gtensor::TensorElement;
use crate::ncalg::{Element, Word};
use crate::par::par_map;
use crate::report::Report;
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug)]
pub struct HopfCheckOptions {
    /// Every normal word up to this length is checked.
    pub exhaustive_len: usize,
    /// Additional random words of length up to 5.
    pub random_words: usize,
    pub seed: u64,
}

impl Default for HopfCheckOptions {
    fn default() -> Self {
        HopfCheckOptions { exhaustive_len: 2, random_words: 20, seed: 11 }
    }
}

fn normal_words(h: &HopfData, max_len: usize) -> Vec<Word> {
    let n = h.pres.ngens() as u8;
    let mut out = Vec::new();
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for x in 0..n {
                let mut v = w.clone();
                v.push(x);
                if h.pres.is_normal_word(&v) {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn word_axioms(h: &HopfData, w: &Word) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let p = &h.pres;
    let name = p.word_string(w);
    let x = Element::word(w.clone(), Scalar::one());
    let d = h.word_coproduct(w)?;
    let left = h.coproduct_on_leg(&d, 0)?;
    let right = h.coproduct_on_leg(&d, 1)?;
    if left != right {
        bad.push(format!("coassociativity on {name}: {}", left.sub(&right).show(p)));
    }
    let one_side = TensorElement::from_element(&x, h.mode);
    if h.counit_on_leg(&d, 0)? != one_side {
        bad.push(format!("left counit on {name}"));
    }
    if h.counit_on_leg(&d, 1)? != one_side {
        bad.push(format!("right counit on {name}"));
    }
    if h.has_antipode() {
        let unit = Element::scalar(h.word_counit(w));
        let l = h.antipode_on_leg(&d, 0)?.multiply_out(p)?;
        if l != unit {
            bad.push(format!("m(S⊗id)Δ on {name}: {}", p.show(&l.sub(&unit))));
        }
        let r = h.antipode_on_leg(&d, 1)?.multiply_out(p)?;
        if r != unit {
            bad.push(format!("m(id⊗S)Δ on {name}: {}", p.show(&r.sub(&unit))));
        }
    }
    Ok(bad)
}

/// Coassociativity, counit and antipode laws on words, and compatibility of
/// `Δ`, `ε`, `S` with every rewrite rule.
pub fn check_hopf_axioms(h: &HopfData, opts: HopfCheckOptions) -> Result<Report> {
    let p = &h.pres;
    let mut report = Report::new(format!("hopf axioms of {}", h.name));
    let rules: Vec<((u8, u8), Element)> = p.rule_list().into_iter().map(|(k, r)| (k, r.clone())).collect();
    let rule_results = par_map(&rules, |((a, b), rhs)| -> Result<Vec<String>> {
        let mut bad = Vec::new();
        let lhs_name = p.word_string(&[*a, *b]);
        let eps_l = h.eps_gen(*a) * h.eps_gen(*b);
        if eps_l != h.counit(rhs) {
            bad.push(format!("counit not compatible with rule {lhs_name}"));
        }
        let dl = h.delta_gen(*a).mul(p, h.delta_gen(*b))?;
        let dr = h.coproduct(rhs)?;
        if dl != dr {
            bad.push(format!("coproduct not compatible with rule {lhs_name}: {}", dl.sub(&dr).show(p)));
        }
        if h.has_antipode() {
            let sl = h.word_antipode(&[*a, *b])?;
            let sr = h.antipode(rhs)?;
            if sl != sr {
                bad.push(format!("antipode not compatible with rule {lhs_name}: {}", p.show(&sl.sub(&sr))));
            }
        }
        Ok(bad)
    });
    for r in rule_results {
        report.checked += 1;
        report.failures.extend(r?);
    }
    let mut words = normal_words(h, opts.exhaustive_len.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let n = p.ngens() as u8;
    for _ in 0..opts.random_words {
        let len = rng.gen_range(1..=5);
        let raw: Word = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let nf = p.word_nf(&raw)?;
        let first = nf.terms().next().map(|(w, _)| w.clone());
        words.extend(first);
    }
    let word_results = par_map(&words, |w| word_axioms(h, w));
    for r in word_results {
        report.checked += 1;
        report.failures.extend(r?);
    }
    if let Some(g) = h.g {
        let gg = p.word_nf(&[g, g])?;
        report.expect(gg == Element::one(), || "g² ≠ 1".into());
        let dg = TensorElement::pure(&[&Element::letter(g), &Element::letter(g)], h.mode);
        report.expect(h.delta_gen(g) == &dg, || "Δg ≠ g⊗g".into());
        report.expect(h.eps_gen(g).is_one(), || "ε(g) ≠ 1".into());
    }
    Ok(report)
}

/// `[c, x] = 0` for every generator `x`.
pub fn casimir_central_check(h: &HopfData, c: &Element) -> Result<Report> {
    let p = &h.pres;
    let mut report = Report::new(format!("centrality of {}", p.show(c)));
    let c = p.normal_form(c)?;
    for i in 0..p.ngens() as u8 {
        let x = Element::letter(i);
        let comm = p.commutator(&c, &x)?;
        report.expect(comm.is_zero(), || format!("[c, {}] = {}", p.gens()[i as usize].name, p.show(&comm)));
    }
    Ok(report)
}
