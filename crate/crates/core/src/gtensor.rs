//! Tensor powers of a presented algebra, bosonic or with the Koszul sign rule.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{QgwError, Result};
use crate::ncalg::{tensor_presentation, Element, Presentation, Word};
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    Bosonic,
    Super,
}

impl Mode {
    pub fn is_super(self) -> bool {
        self == Mode::Super
    }

    /// `(-1)^{ab}` in super mode, `1` otherwise.
    pub fn sign(self, a: u8, b: u8) -> i64 {
        if self.is_super() && a & b & 1 == 1 {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    arity: usize,
    mode: Mode,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorElement {
    pub fn zero(arity: usize, mode: Mode) -> Self {
        TensorElement { arity, mode, terms: BTreeMap::new() }
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn one(arity: usize, mode: Mode) -> Self {
        let mut t = TensorElement::zero(arity, mode);
        t.add_term(vec![Vec::new(); arity], &Scalar::one());
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn with_mode(&self, mode: Mode) -> Self {
        TensorElement { mode, ..self.clone() }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, legs: Vec<Word>, c: &Scalar) {
        debug_assert_eq!(legs.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&legs) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&legs);
                }
            }
            None => {
                self.terms.insert(legs, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, o: &TensorElement, c: &Scalar) {
        for (k, v) in &o.terms {
            self.add_term(k.clone(), &(v * c));
        }
    }

    pub fn add(&self, o: &TensorElement) -> TensorElement {
        let mut r = self.clone();
        r.add_scaled(o, &Scalar::one());
        r
    }

    pub fn sub(&self, o: &TensorElement) -> TensorElement {
        let mut r = self.clone();
        r.add_scaled(o, &Scalar::from_i64(-1));
        r
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        let mut r = TensorElement::zero(self.arity, self.mode);
        r.add_scaled(self, c);
        r
    }

    /// `e1 ⊗ e2 ⊗ …` of normal-form elements.
    pub fn pure(legs: &[&Element], mode: Mode) -> TensorElement {
        let mut acc = TensorElement::one(0, mode);
        for e in legs {
            let mut next = TensorElement::zero(acc.arity + 1, mode);
            for (k, c) in &acc.terms {
                for (w, d) in e.terms() {
                    let mut legs = k.clone();
                    legs.push(w.clone());
                    next.add_term(legs, &(c * d));
                }
            }
            acc = next;
        }
        acc
    }

    pub fn from_element(e: &Element, mode: Mode) -> TensorElement {
        TensorElement::pure(&[e], mode)
    }

    /// The element of an arity-1 tensor.
    pub fn to_element(&self) -> Element {
        assert_eq!(self.arity, 1);
        Element::from_terms(self.terms.iter().map(|(k, c)| (k[0].clone(), c.clone())))
    }

    fn check(&self, o: &TensorElement) -> Result<()> {
        if self.arity != o.arity {
            return Err(QgwError::ArityMismatch(self.arity, o.arity));
        }
        if self.mode != o.mode {
            return Err(QgwError::ModeMismatch);
        }
        Ok(())
    }

    /// Sign picked up by `(a1⊗…⊗ak)(b1⊗…⊗bk) → ±(a1b1⊗…⊗akbk)`.
    fn koszul(&self, p: &Presentation, a: &[Word], b: &[Word]) -> i64 {
        if !self.mode.is_super() {
            return 1;
        }
        let mut odd = 0u8;
        let mut parity = 0u8;
        // b_j passes a_i for i > j.
        for j in (0..a.len()).rev() {
            parity ^= odd & p.word_degree(&b[j]);
            odd ^= p.word_degree(&a[j]);
        }
        if parity == 1 {
            -1
        } else {
            1
        }
    }

    pub fn mul(&self, p: &Presentation, o: &TensorElement) -> Result<TensorElement> {
        self.check(o)?;
        let mut out = TensorElement::zero(self.arity, self.mode);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &o.terms {
                let sign = self.koszul(p, ka, kb);
                let mut partial = TensorElement::one(0, self.mode);
                for (wa, wb) in ka.iter().zip(kb) {
                    let leg = if wa.is_empty() {
                        Element::word(wb.clone(), Scalar::one())
                    } else if wb.is_empty() {
                        Element::word(wa.clone(), Scalar::one())
                    } else {
                        p.word_nf(&[wa.as_slice(), wb.as_slice()].concat())?
                    };
                    if leg.is_zero() {
                        partial = TensorElement::zero(0, self.mode);
                        break;
                    }
                    partial = partial.append_leg(&leg);
                }
                let c = &(ca * cb) * &Scalar::from_i64(sign);
                for (k, d) in partial.terms {
                    out.add_term(k, &(&c * &d));
                }
            }
        }
        Ok(out)
    }

    fn append_leg(&self, e: &Element) -> TensorElement {
        let mut next = TensorElement::zero(self.arity + 1, self.mode);
        for (k, c) in &self.terms {
            for (w, d) in e.terms() {
                let mut legs = k.clone();
                legs.push(w.clone());
                next.add_term(legs, &(c * d));
            }
        }
        next
    }

    /// Places the legs of `self` at `positions` of an arity-`k` tensor, filling the rest with 1.
    pub fn embed(&self, positions: &[usize], k: usize) -> Result<TensorElement> {
        let ok = positions.len() == self.arity
            && positions.windows(2).all(|w| w[0] < w[1])
            && positions.iter().all(|&i| i < k);
        if !ok {
            return Err(QgwError::BadPositions(positions.to_vec(), k));
        }
        let mut out = TensorElement::zero(k, self.mode);
        for (legs, c) in &self.terms {
            let mut full = vec![Vec::new(); k];
            for (w, &i) in legs.iter().zip(positions) {
                full[i] = w.clone();
            }
            out.add_term(full, c);
        }
        Ok(out)
    }

    /// Permutes legs: leg `i` of the result is leg `perm[i]` of `self`,
    /// with the Koszul sign of the permutation in super mode.
    pub fn permute(&self, p: &Presentation, perm: &[usize]) -> TensorElement {
        assert_eq!(perm.len(), self.arity);
        let mut out = TensorElement::zero(self.arity, self.mode);
        for (legs, c) in &self.terms {
            let mut sign = 1;
            if self.mode.is_super() {
                for i in 0..perm.len() {
                    for j in i + 1..perm.len() {
                        if perm[i] > perm[j] {
                            sign *= self.mode.sign(p.word_degree(&legs[perm[i]]), p.word_degree(&legs[perm[j]]));
                        }
                    }
                }
            }
            let new: Vec<Word> = perm.iter().map(|&i| legs[i].clone()).collect();
            out.add_term(new, &c.scale_int(sign));
        }
        out
    }

    /// `τ(a⊗b) = ±b⊗a`.
    pub fn flip(&self, p: &Presentation) -> TensorElement {
        self.permute(p, &[1, 0])
    }

    /// Replaces leg `i` by an arity-`m` tensor image of each word under an even
    /// linear map, giving arity `k-1+m`.
    pub fn map_leg(
        &self,
        i: usize,
        m: usize,
        mut f: impl FnMut(&Word) -> Result<TensorElement>,
    ) -> Result<TensorElement> {
        let mut out = TensorElement::zero(self.arity - 1 + m, self.mode);
        for (legs, c) in &self.terms {
            let img = f(&legs[i])?;
            for (ilegs, d) in img.terms() {
                let mut full = legs[..i].to_vec();
                full.extend(ilegs.iter().cloned());
                full.extend(legs[i + 1..].iter().cloned());
                out.add_term(full, &(c * d));
            }
        }
        Ok(out)
    }

    /// Applies an even linear map `Element → Element` on leg `i`.
    pub fn map_leg_element(&self, i: usize, mut f: impl FnMut(&Word) -> Result<Element>) -> Result<TensorElement> {
        let mode = self.mode;
        self.map_leg(i, 1, |w| Ok(TensorElement::from_element(&f(w)?, mode)))
    }

    /// Applies a scalar functional (e.g. the counit) on leg `i`.
    pub fn contract_leg(&self, i: usize, mut f: impl FnMut(&Word) -> Result<Scalar>) -> Result<TensorElement> {
        let mode = self.mode;
        self.map_leg(i, 0, |w| Ok(TensorElement::one(0, mode).scale(&f(w)?)))
    }

    /// Multiplies all legs together in order (no signs).
    pub fn multiply_out(&self, p: &Presentation) -> Result<Element> {
        let mut out = Element::zero();
        for (legs, c) in &self.terms {
            let w: Word = legs.concat();
            out.add_scaled(&p.word_nf(&w)?, c);
        }
        Ok(out)
    }

    /// Normalizes every leg (for tensors assembled from unnormalized words).
    pub fn normalize(&self, p: &Presentation) -> Result<TensorElement> {
        let mut out = TensorElement::zero(self.arity, self.mode);
        for (legs, c) in &self.terms {
            let mut partial = TensorElement::one(0, self.mode);
            for w in legs {
                partial = partial.append_leg(&p.word_nf(w)?);
            }
            out.add_scaled(&partial, c);
        }
        Ok(out)
    }

    /// ℤ2-degree of a term.
    pub fn term_degree(p: &Presentation, legs: &[Word]) -> u8 {
        legs.iter().fold(0, |acc, w| acc ^ p.word_degree(w))
    }

    pub fn show(&self, p: &Presentation) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(legs, c)| {
                let body = legs.iter().map(|w| p.word_string(w)).collect::<Vec<_>>().join(" ⊗ ");
                if c.is_one() {
                    body
                } else {
                    format!("({c})*[{body}]")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `A ⊗ A` as a single presentation, second copy primed, for computing
/// inverses of tensors by rewriting.
pub struct TensorSquare {
    pub pres: Presentation,
    off: u8,
    mode: Mode,
}

impl TensorSquare {
    pub fn new(a: &Presentation, mode: Mode) -> Result<Self> {
        let mut sk = a.to_skeleton();
        for g in &mut sk.gens {
            g.name.push('\'');
        }
        let b = Presentation::from_skeleton(sk, a.step_cap())?;
        let pres = tensor_presentation(a, &b, mode.is_super())?;
        Ok(TensorSquare { pres, off: a.ngens() as u8, mode })
    }

    pub fn embed(&self, t: &TensorElement) -> Result<Element> {
        if t.arity() != 2 {
            return Err(QgwError::ArityMismatch(t.arity(), 2));
        }
        let mut e = Element::zero();
        for (legs, c) in t.terms() {
            let w: Word = legs[0].iter().copied().chain(legs[1].iter().map(|x| x + self.off)).collect();
            e.add_term(w, c);
        }
        self.pres.normal_form(&e)
    }

    /// Inverse of `embed` on normal forms.
    pub fn split(&self, e: &Element) -> TensorElement {
        let mut t = TensorElement::zero(2, self.mode);
        for (w, c) in e.terms() {
            let cut = w.iter().position(|&x| x >= self.off).unwrap_or(w.len());
            let right = w[cut..].iter().map(|x| x - self.off).collect();
            t.add_term(vec![w[..cut].to_vec(), right], c);
        }
        t
    }

    /// Two-sided inverse of an invertible tensor `1 − nilpotent` up to a unit word.
    pub fn invert(&self, t: &TensorElement, max_terms: usize) -> Result<Option<TensorElement>> {
        let e = self.embed(t)?;
        Ok(self.pres.unipotent_inverse(&e, max_terms)?.map(|inv| self.split(&inv)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Skeleton;

    fn eta_alg() -> Presentation {
        let mut sk = Skeleton::new("ext");
        let e = sk.gen("eta", 1);
        sk.nilpotent(e);
        sk.build().unwrap()
    }

    #[test]
    fn koszul_swap() {
        let p = eta_alg();
        let eta = p.g("eta").unwrap();
        let one = Element::one();
        let a = TensorElement::pure(&[&eta, &one], Mode::Super);
        let b = TensorElement::pure(&[&one, &eta], Mode::Super);
        let ee = TensorElement::pure(&[&eta, &eta], Mode::Super);
        assert_eq!(a.mul(&p, &b).unwrap(), ee);
        assert_eq!(b.mul(&p, &a).unwrap(), ee.scale(&Scalar::from_i64(-1)));
        let ab = a.with_mode(Mode::Bosonic).mul(&p, &b.with_mode(Mode::Bosonic)).unwrap();
        let ba = b.with_mode(Mode::Bosonic).mul(&p, &a.with_mode(Mode::Bosonic)).unwrap();
        assert_eq!(ab, ba);
    }

    #[test]
    fn embed_positions() {
        let p = eta_alg();
        let eta = p.g("eta").unwrap();
        let t = TensorElement::pure(&[&eta, &eta], Mode::Super);
        let e = t.embed(&[0, 2], 3).unwrap();
        assert_eq!(e.terms().next().unwrap().0, &vec![vec![0u8], vec![], vec![0u8]]);
        assert!(matches!(t.embed(&[2, 0], 3), Err(QgwError::BadPositions(..))));
        let one = TensorElement::one(0, Mode::Super);
        assert_eq!(one.embed(&[], 3).unwrap(), TensorElement::one(3, Mode::Super));
    }

    #[test]
    fn mismatch_errors() {
        let p = eta_alg();
        let a = TensorElement::one(2, Mode::Super);
        assert!(matches!(a.mul(&p, &TensorElement::one(3, Mode::Super)), Err(QgwError::ArityMismatch(2, 3))));
        assert!(matches!(a.mul(&p, &TensorElement::one(2, Mode::Bosonic)), Err(QgwError::ModeMismatch)));
    }
}
