//! Coproduct, counit and antipode on presented algebras, plus the checks and
//! constructions built on them.

mod checks;
mod io;
mod morphism;
mod superize;

use std::sync::Arc;

use dashmap::DashMap;

pub use checks::{casimir_central_check, check_hopf_axioms, HopfCheckOptions};
pub use io::HopfFile;
pub use morphism::{hopf_map_check, AlgebraMap};
pub use superize::{r_g, superize, z2_extend};

use crate::error::{QgwError, Result};
use crate::gtensor::{Mode, TensorElement};
use crate::ncalg::{Element, Pres, Word};
use crate::scalars::Scalar;

/// Structure maps given on generators and extended (anti)multiplicatively.
pub struct HopfData {
    pub name: String,
    pub pres: Pres,
    pub mode: Mode,
    delta: Vec<TensorElement>,
    eps: Vec<Scalar>,
    antipode: Option<Vec<Element>>,
    pub g: Option<u8>,
    cache: DashMap<Word, TensorElement>,
}

impl std::fmt::Debug for HopfData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HopfData").field("name", &self.name).field("mode", &self.mode).finish()
    }
}

impl Clone for HopfData {
    fn clone(&self) -> Self {
        HopfData {
            name: self.name.clone(),
            pres: self.pres.clone(),
            mode: self.mode,
            delta: self.delta.clone(),
            eps: self.eps.clone(),
            antipode: self.antipode.clone(),
            g: self.g,
            cache: DashMap::new(),
        }
    }
}

impl HopfData {
    /// `delta`, `eps` (and `antipode`) are indexed by generator.
    pub fn new(
        name: &str,
        pres: Pres,
        mode: Mode,
        delta: Vec<TensorElement>,
        eps: Vec<Scalar>,
        antipode: Option<Vec<Element>>,
        g: Option<u8>,
    ) -> Result<Self> {
        let n = pres.ngens();
        if delta.len() != n || eps.len() != n || antipode.as_ref().is_some_and(|s| s.len() != n) {
            return Err(QgwError::Dimension(format!("structure maps must cover all {n} generators")));
        }
        let delta = delta
            .into_iter()
            .map(|d| {
                if d.arity() != 2 {
                    return Err(QgwError::ArityMismatch(d.arity(), 2));
                }
                d.with_mode(mode).normalize(&pres)
            })
            .collect::<Result<Vec<_>>>()?;
        let antipode = antipode.map(|s| s.iter().map(|e| pres.normal_form(e)).collect::<Result<Vec<_>>>()).transpose()?;
        Ok(HopfData { name: name.to_string(), pres, mode, delta, eps, antipode, g, cache: DashMap::new() })
    }

    /// Builder by generator names; unspecified generators must not remain.
    pub fn from_named(
        name: &str,
        pres: Pres,
        mode: Mode,
        maps: &[(&str, TensorElement, Scalar, Option<Element>)],
        g: Option<&str>,
    ) -> Result<Self> {
        let n = pres.ngens();
        let mut delta = vec![None; n];
        let mut eps = vec![None; n];
        let mut anti = vec![None; n];
        for (gname, d, e, s) in maps {
            let i = pres.idx(gname)? as usize;
            delta[i] = Some(d.clone());
            eps[i] = Some(e.clone());
            anti[i] = s.clone();
        }
        let missing = |i: usize| QgwError::Format(format!("no structure maps for {}", pres.gens()[i].name));
        let delta = delta.into_iter().enumerate().map(|(i, d)| d.ok_or_else(|| missing(i))).collect::<Result<Vec<_>>>()?;
        let eps = eps.into_iter().enumerate().map(|(i, d)| d.ok_or_else(|| missing(i))).collect::<Result<Vec<_>>>()?;
        let antipode = if anti.iter().all(|s| s.is_some()) {
            Some(anti.into_iter().map(|s| s.unwrap()).collect())
        } else {
            None
        };
        let g = g.map(|s| pres.idx(s)).transpose()?;
        HopfData::new(name, pres, mode, delta, eps, antipode, g)
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn has_antipode(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn delta_gen(&self, i: u8) -> &TensorElement {
        &self.delta[i as usize]
    }

    pub fn eps_gen(&self, i: u8) -> &Scalar {
        &self.eps[i as usize]
    }

    pub fn antipode_gen(&self, i: u8) -> Result<&Element> {
        self.antipode.as_ref().map(|s| &s[i as usize]).ok_or(QgwError::NoAntipode)
    }

    /// Replaces the structure maps of one generator (for corruption tests).
    pub fn override_delta(&mut self, i: u8, d: TensorElement) -> Result<()> {
        self.delta[i as usize] = d.with_mode(self.mode).normalize(&self.pres)?;
        self.cache.clear();
        Ok(())
    }

    pub fn word_coproduct(&self, w: &[u8]) -> Result<TensorElement> {
        match w.len() {
            0 => return Ok(TensorElement::one(2, self.mode)),
            1 => return Ok(self.delta[w[0] as usize].clone()),
            _ => {}
        }
        if let Some(hit) = self.cache.get(w) {
            return Ok(hit.clone());
        }
        let head = self.word_coproduct(&w[..w.len() - 1])?;
        let out = head.mul(&self.pres, &self.delta[w[w.len() - 1] as usize])?;
        self.cache.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    pub fn coproduct(&self, e: &Element) -> Result<TensorElement> {
        let mut out = TensorElement::zero(2, self.mode);
        for (w, c) in e.terms() {
            out.add_scaled(&self.word_coproduct(w)?, c);
        }
        Ok(out)
    }

    pub fn word_counit(&self, w: &[u8]) -> Scalar {
        let mut acc = Scalar::one();
        for &x in w {
            acc = &acc * &self.eps[x as usize];
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn counit(&self, e: &Element) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in e.terms() {
            acc += &(c * &self.word_counit(w));
        }
        acc
    }

    /// `S(x1…xn) = ± S(xn)…S(x1)`, with the Koszul sign of the reversal in super mode.
    pub fn word_antipode(&self, w: &[u8]) -> Result<Element> {
        let s = self.antipode.as_ref().ok_or(QgwError::NoAntipode)?;
        let mut sign = 1;
        if self.mode.is_super() {
            // (-1)^{Σ_{i<j} d_i d_j}
            let mut odd = 0u8;
            for &x in w {
                let d = self.pres.gens()[x as usize].degree;
                if d & odd & 1 == 1 {
                    sign = -sign;
                }
                odd ^= d;
            }
        }
        let mut acc = Element::scalar(Scalar::from_i64(sign));
        for &x in w.iter().rev() {
            acc = self.pres.mul(&acc, &s[x as usize])?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    pub fn antipode(&self, e: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            out.add_scaled(&self.word_antipode(w)?, c);
        }
        Ok(out)
    }

    /// `S^n(e)`.
    pub fn antipode_pow(&self, e: &Element, n: u32) -> Result<Element> {
        let mut x = e.clone();
        for _ in 0..n {
            x = self.antipode(&x)?;
        }
        Ok(x)
    }

    /// Applies `Δ` on leg `i` of a tensor.
    pub fn coproduct_on_leg(&self, t: &TensorElement, i: usize) -> Result<TensorElement> {
        t.map_leg(i, 2, |w| self.word_coproduct(w))
    }

    /// Applies `ε` on leg `i` of a tensor.
    pub fn counit_on_leg(&self, t: &TensorElement, i: usize) -> Result<TensorElement> {
        t.contract_leg(i, |w| Ok(self.word_counit(w)))
    }

    /// Applies `S` on leg `i` of a tensor.
    pub fn antipode_on_leg(&self, t: &TensorElement, i: usize) -> Result<TensorElement> {
        t.map_leg_element(i, |w| self.word_antipode(w))
    }

    /// Pure tensor of generator-name words, e.g. `tensor(&[&["K1"], &["X+"]])`.
    pub fn tensor(&self, legs: &[&[&str]]) -> Result<TensorElement> {
        let els = legs.iter().map(|l| self.pres.w(l)).collect::<Result<Vec<_>>>()?;
        let refs: Vec<&Element> = els.iter().collect();
        TensorElement::pure(&refs, self.mode).normalize(&self.pres)
    }

    pub fn into_arc(self) -> Arc<HopfData> {
        Arc::new(self)
    }
}
