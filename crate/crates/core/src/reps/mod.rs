//! Finite-dimensional representations of the non-standard quantum group and of
//! its super form, with the universal R-matrix, ribbon elements and twisting
//! cocycles evaluated on them as exact matrices.

mod decompose;
mod identities;
mod ribbon;
mod twist;
mod universal;

pub use decompose::{tensor_decompose, Decomposition};
pub use identities::{sample_q, IdentitySet, MatrixIdentity};
pub use ribbon::{ribbon_check, ribbon_eval, ribbon_identities, ribbon_on, RibbonElement};
pub use twist::{chi_on, twist_check, twist_identities};
pub use universal::{
    flip_matrix, qt_identities, qybe_sweep, quasitriangularity_check, quasitriangularity_identities, r_on,
    universal_r_eval, RKind,
};

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::catalog::lin;
use crate::error::{QgwError, Result};
use crate::frt::{eval_matrix, matrix_rep_check};
use crate::gtensor::TensorElement;
use crate::hopfcore::HopfData;
use crate::linalg::SMatrix;
use crate::ncalg::{Element, Word};
use crate::scalars::Scalar;

/// Highest weight data of a two-dimensional irreducible representation.
#[derive(Clone, Debug, PartialEq)]
pub enum RepLabel {
    /// `λ1 = q^{m1}`, `λ2 = (−1)^{m2} q^{m2}`.
    Int(i64, i64),
    /// Arbitrary invertible `(λ1, λ2)`.
    Sym(Scalar, Scalar),
}

impl RepLabel {
    pub fn lambdas(&self) -> Result<(Scalar, Scalar)> {
        match self {
            RepLabel::Int(m1, m2) => {
                let l2 = Scalar::q_pow(small(*m2)?);
                let l2 = if m2 % 2 == 0 { l2 } else { -l2 };
                Ok((Scalar::q_pow(small(*m1)?), l2))
            }
            RepLabel::Sym(a, b) => Ok((a.clone(), b.clone())),
        }
    }

    pub fn ints(&self) -> Result<(i64, i64)> {
        match self {
            RepLabel::Int(a, b) => Ok((*a, *b)),
            RepLabel::Sym(..) => Err(QgwError::NonIntegerLabel),
        }
    }

    /// Nonzero `λ1, λ2` with `(λ1λ2)² ≠ 1`.
    pub fn validate(&self) -> Result<()> {
        let (a, b) = self.lambdas()?;
        if a.is_zero() || b.is_zero() {
            return Err(QgwError::DegenerateLabel);
        }
        let p = &a * &b;
        if (&p * &p).is_one() {
            return Err(QgwError::DegenerateLabel);
        }
        Ok(())
    }

    /// `π(g) = e^{iπH2/2}` is `−diag(1, −1)` for odd `m2`; symbolic labels take `+diag(1, −1)`.
    pub fn g_sign(&self) -> bool {
        matches!(self, RepLabel::Int(_, m2) if m2 % 2 != 0)
    }

    /// `H1`, `H2` eigenvalues on the two basis vectors.
    pub fn weights(&self) -> Result<Weights> {
        let (m1, m2) = self.ints()?;
        Ok(Weights { h1: vec![2 * m1, 2 * (m1 - 1)], h2: vec![2 * m2, 2 * (m2 + 1)] })
    }
}

fn small(m: i64) -> Result<i32> {
    i32::try_from(m).map_err(|_| QgwError::Format(format!("label {m} out of range")))
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Int(a, b) => write!(f, "[{a},{b}]"),
            RepLabel::Sym(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

impl FromStr for RepLabel {
    type Err = QgwError;

    /// `m1,m2` or `[m1,m2]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts: Vec<&str> = t.split(',').map(str::trim).collect();
        let bad = || QgwError::Parse { pos: 0, msg: format!("bad label `{s}`") };
        if parts.len() != 2 {
            return Err(bad());
        }
        let m1 = parts[0].parse().map_err(|_| bad())?;
        let m2 = parts[1].parse().map_err(|_| bad())?;
        Ok(RepLabel::Int(m1, m2))
    }
}

/// Eigenvalues of the primitive `H1`, `H2` on a diagonal basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights {
    pub h1: Vec<i64>,
    pub h2: Vec<i64>,
}

impl Weights {
    fn trivial(n: usize) -> Self {
        Weights { h1: vec![0; n], h2: vec![0; n] }
    }

    fn tensor(&self, o: &Weights) -> Weights {
        let pair = |a: &[i64], b: &[i64]| a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect();
        Weights { h1: pair(&self.h1, &o.h1), h2: pair(&self.h2, &o.h2) }
    }
}

/// `q^{k/4}`; fails unless `4 | k`.
pub fn q_quarter(k: i64) -> Result<Scalar> {
    if k % 4 != 0 {
        return Err(QgwError::NonIntegerLabel);
    }
    Ok(Scalar::q_pow(small(k / 4)?))
}

/// `e^{iπk/4}`; fails unless `k` is even.
pub fn phase_quarter(k: i64) -> Result<Scalar> {
    match k.rem_euclid(8) {
        0 => Ok(Scalar::one()),
        2 => Ok(Scalar::i()),
        4 => Ok(-Scalar::one()),
        6 => Ok(-Scalar::i()),
        _ => Err(QgwError::NonIntegerLabel),
    }
}

/// `e^{iπm} = (−1)^m`.
pub fn phase_pi(m: i64) -> Scalar {
    if m % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// Matrices for every generator of a Hopf algebra, on a graded basis, with
/// `H`-weights when the label is integral.
#[derive(Clone, Debug)]
pub struct Rep {
    pub label: Option<RepLabel>,
    pub hopf: Arc<HopfData>,
    images: Vec<SMatrix>,
    grading: Vec<u8>,
    weights: Option<Weights>,
}

impl Rep {
    /// Checks every rewrite rule as a matrix identity.
    pub fn new(
        hopf: Arc<HopfData>,
        images: Vec<SMatrix>,
        grading: Vec<u8>,
        weights: Option<Weights>,
        label: Option<RepLabel>,
    ) -> Result<Self> {
        let rep = matrix_rep_check(&hopf.pres, &images, "rep");
        if let Some(f) = rep.first_failure() {
            return Err(QgwError::NotARepresentation(f.to_string()));
        }
        Ok(Rep { label, hopf, images, grading, weights })
    }

    /// The counit as a one-dimensional representation.
    pub fn trivial(hopf: Arc<HopfData>) -> Result<Self> {
        let images = (0..hopf.pres.ngens()).map(|i| SMatrix::diag(&[hopf.eps_gen(i as u8).clone()])).collect();
        Rep::new(hopf, images, vec![0], Some(Weights::trivial(1)), None)
    }

    pub fn dim(&self) -> usize {
        self.grading.len()
    }

    pub fn grading(&self) -> &[u8] {
        &self.grading
    }

    pub fn images(&self) -> &[SMatrix] {
        &self.images
    }

    pub fn weights(&self) -> Result<&Weights> {
        self.weights.as_ref().ok_or(QgwError::NonIntegerLabel)
    }

    pub fn image(&self, name: &str) -> Result<&SMatrix> {
        Ok(&self.images[self.hopf.pres.idx(name)? as usize])
    }

    pub fn eval(&self, e: &Element) -> SMatrix {
        if self.images.is_empty() {
            return SMatrix::zeros(self.dim(), self.dim());
        }
        eval_matrix(e, &self.images)
    }

    /// Image of a product of named generators with a coefficient sum.
    pub fn eval_lin(&self, terms: &[(Scalar, &[&str])]) -> Result<SMatrix> {
        Ok(self.eval(&lin(&self.hopf.pres, terms)?))
    }

    fn word(&self, w: &Word) -> SMatrix {
        w.iter().fold(SMatrix::identity(self.dim()), |acc, &x| acc.mul(&self.images[x as usize]))
    }

    fn word_degree(&self, w: &Word) -> u8 {
        if self.hopf.mode.is_super() {
            self.hopf.pres.word_degree(w)
        } else {
            0
        }
    }

    /// Same matrices, with the coproduct of another structure on the same algebra.
    pub fn with_hopf(&self, hopf: Arc<HopfData>) -> Result<Rep> {
        if hopf.pres.name != self.hopf.pres.name || hopf.pres.ngens() != self.hopf.pres.ngens() {
            return Err(QgwError::Format(format!("{} is not an algebra of {}", self.hopf.name, hopf.name)));
        }
        Ok(Rep { hopf, ..self.clone() })
    }

    /// `π⊗π′` through the coproduct, on the basis `e_i⊗f_j` indexed `i·dim′ + j`.
    pub fn tensor(&self, o: &Rep) -> Result<Rep> {
        if !Arc::ptr_eq(&self.hopf, &o.hopf) && self.hopf.name != o.hopf.name {
            return Err(QgwError::Format("tensor factors carry different coproducts".into()));
        }
        let n = self.hopf.pres.ngens();
        let images = (0..n).map(|x| eval_tensor(self.hopf.delta_gen(x as u8), &[self, o])).collect();
        let grading = self.grading.iter().flat_map(|a| o.grading.iter().map(move |b| (a + b) & 1)).collect();
        let weights = match (&self.weights, &o.weights) {
            (Some(a), Some(b)) => Some(a.tensor(b)),
            _ => None,
        };
        Rep::new(self.hopf.clone(), images, grading, weights, None)
    }
}

/// A tensor element evaluated on `legs[0]⊗legs[1]⊗…` with the Koszul sign in super mode.
pub fn eval_tensor(t: &TensorElement, legs: &[&Rep]) -> SMatrix {
    let dim: usize = legs.iter().map(|r| r.dim()).product();
    let mut out = SMatrix::zeros(dim, dim);
    for (words, c) in t.terms() {
        let mut m = legs[0].word(&words[0]);
        let mut grading = legs[0].grading.clone();
        for (leg, w) in legs.iter().zip(words).skip(1) {
            m = m.kron_graded(&leg.word(w), leg.word_degree(w), &grading);
            grading = grading.iter().flat_map(|a| leg.grading.iter().map(move |b| (a + b) & 1)).collect();
        }
        out = out.add(&m.scale(c));
    }
    out
}

/// Bosonic generator matrices for a label, by name.
fn irrep_images(label: &RepLabel, g_sign: bool) -> Result<Vec<(&'static str, SMatrix)>> {
    label.validate()?;
    let (l1, l2) = label.lambdas()?;
    let q = Scalar::q();
    let qi = Scalar::q_pow(-1);
    let k1 = SMatrix::diag(&[l1.clone(), &qi * &l1]);
    let k2 = SMatrix::diag(&[l2.clone(), -(&q * &l2)]);
    let top = (&(&l1 * &l2) - &(&l1 * &l2).inv()?).try_div(&Scalar::q_minus_qinv())?;
    let xp = SMatrix::unit(2, 0, 1).scale(&top);
    let xm = SMatrix::unit(2, 1, 0);
    let s = if g_sign { -Scalar::one() } else { Scalar::one() };
    let g = SMatrix::diag(&[s.clone(), -s]);
    Ok(vec![
        ("K1^-1", k1.inverse()?),
        ("K1", k1),
        ("K2^-1", k2.inverse()?),
        ("K2", k2),
        ("g", g),
        ("X+", xp),
        ("X-", xm),
    ])
}

fn assemble(hopf: &Arc<HopfData>, named: &[(&str, SMatrix)]) -> Result<Vec<SMatrix>> {
    let p = &hopf.pres;
    let mut images = vec![None; p.ngens()];
    for (name, m) in named {
        images[p.idx(name)? as usize] = Some(m.clone());
    }
    images
        .into_iter()
        .zip(p.gens())
        .map(|(m, g)| m.ok_or_else(|| QgwError::UnknownName(g.name.clone())))
        .collect()
}

/// The two-dimensional irreducible representation with the given label,
/// for the coproduct of `kind`.
pub fn rep_for(label: &RepLabel, kind: RKind) -> Result<Rep> {
    rep_with_g(label, kind, label.g_sign())
}

/// As [`rep_for`] with `π(g) = ±diag(1, −1)`, negative when `g_sign`.
pub(crate) fn rep_with_g(label: &RepLabel, kind: RKind, g_sign: bool) -> Result<Rep> {
    let hopf = kind.hopf()?;
    let bos = irrep_images(label, g_sign)?;
    let weights = label.weights().ok();
    if !kind.is_super() {
        let images = assemble(&hopf, &bos)?;
        return Rep::new(hopf, images, vec![0, 0], weights, Some(label.clone()));
    }
    let at = |n: &str| bos.iter().find(|(k, _)| *k == n).map(|(_, m)| m.clone()).expect("generator");
    let g = at("g");
    let qh = at("K1").mul(&at("K2")).mul(&g);
    let qn = at("K2").mul(&g);
    let named = [
        ("Qh^-1", qh.inverse()?),
        ("Qh", qh),
        ("QN^-1", qn.inverse()?),
        ("QN", qn),
        ("eta", at("X+")),
        ("eta+", at("X-").mul(&g)),
    ];
    let images = assemble(&hopf, &named)?;
    Rep::new(hopf, images, vec![0, 1], weights, Some(label.clone()))
}

/// The irreducible representation for the standard coproduct.
pub fn rep_build(label: &RepLabel) -> Result<Rep> {
    rep_for(label, RKind::Standard)
}

/// Diagonal matrix with entries `f(i)`.
pub(crate) fn diag_by(n: usize, f: impl Fn(usize) -> Result<Scalar>) -> Result<SMatrix> {
    let d = (0..n).map(f).collect::<Result<Vec<_>>>()?;
    Ok(SMatrix::diag(&d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatlab::catalog;

    #[test]
    fn canonical_label() {
        let r = rep_build(&RepLabel::Int(1, 0)).unwrap();
        let q = Scalar::q();
        assert_eq!(r.image("K1").unwrap(), &SMatrix::diag(&[q.clone(), Scalar::one()]));
        assert_eq!(r.image("K2").unwrap(), &SMatrix::diag(&[Scalar::one(), -q]));
        assert_eq!(r.image("X+").unwrap(), &SMatrix::unit(2, 0, 1));
        assert_eq!(r.image("X-").unwrap(), &SMatrix::unit(2, 1, 0));
        assert_eq!(r.image("g").unwrap(), &SMatrix::diag(&[Scalar::one(), -Scalar::one()]));
        // Same matrices as the pairing with the l± operator matrices.
        let rho = crate::frt::rho_matrices(&catalog::alexander_conway().unwrap(), true).unwrap();
        assert_eq!(rho[0], *r.image("K1").unwrap());
    }

    #[test]
    fn symbolic_label() {
        let l1 = Scalar::named("la1").unwrap();
        let l2 = Scalar::named("la2").unwrap();
        let r = rep_build(&RepLabel::Sym(l1.clone(), l2.clone())).unwrap();
        let p = &l1 * &l2;
        let want = (&p - &p.inv().unwrap()).try_div(&Scalar::q_minus_qinv()).unwrap();
        assert_eq!(r.image("X+").unwrap().get(0, 1), &want);
        assert!(r.weights().is_err());
    }

    #[test]
    fn degenerate_labels() {
        for l in [RepLabel::Int(0, 0), RepLabel::Int(1, -1), RepLabel::Sym(Scalar::one(), -Scalar::one())] {
            assert_eq!(rep_build(&l).unwrap_err(), QgwError::DegenerateLabel, "{l}");
        }
    }

    #[test]
    fn phases() {
        for m in -5i64..6 {
            assert_eq!(phase_quarter(4 * m).unwrap(), phase_pi(m));
            assert_eq!(phase_quarter(4 * m * m).unwrap(), phase_pi(m));
        }
        assert_eq!(phase_quarter(2).unwrap(), Scalar::i());
        assert!(phase_quarter(1).is_err());
        assert!(q_quarter(2).is_err());
    }

    #[test]
    fn super_rep_and_tensor() {
        for kind in [RKind::Super, RKind::SuperOmega, RKind::Standard, RKind::Omega] {
            let a = rep_for(&RepLabel::Int(1, 0), kind).unwrap();
            let b = rep_for(&RepLabel::Int(2, 1), kind).unwrap();
            let t = a.tensor(&b).unwrap();
            assert_eq!(t.dim(), 4);
        }
    }

    #[test]
    fn label_parsing() {
        assert_eq!("[2,-1]".parse::<RepLabel>().unwrap(), RepLabel::Int(2, -1));
        assert_eq!("1, 0".parse::<RepLabel>().unwrap(), RepLabel::Int(1, 0));
        assert!("1".parse::<RepLabel>().is_err());
    }
}
