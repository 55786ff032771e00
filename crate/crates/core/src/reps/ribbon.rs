use std::fmt;
use std::str::FromStr;

use super::universal::{flip_matrix, r_on, RKind};
use super::{diag_by, phase_quarter, q_quarter, rep_build, IdentitySet, Rep, RepLabel};
use crate::catalog::{c1, lin};
use crate::error::{QgwError, Result};
use crate::linalg::SMatrix;
use crate::ncalg::Element;
use crate::report::Report;
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RibbonElement {
    U,
    SU,
    SUInv,
    Z,
    R,
    Nu,
    NuInv,
}

impl RibbonElement {
    pub const ALL: [RibbonElement; 7] = [
        RibbonElement::U,
        RibbonElement::SU,
        RibbonElement::SUInv,
        RibbonElement::Z,
        RibbonElement::R,
        RibbonElement::Nu,
        RibbonElement::NuInv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RibbonElement::U => "u",
            RibbonElement::SU => "Su",
            RibbonElement::SUInv => "Su_inv",
            RibbonElement::Z => "z",
            RibbonElement::R => "r",
            RibbonElement::Nu => "nu",
            RibbonElement::NuInv => "nu_inv",
        }
    }
}

impl fmt::Display for RibbonElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RibbonElement {
    type Err = QgwError;

    fn from_str(s: &str) -> Result<Self> {
        RibbonElement::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| QgwError::UnknownName(s.into()))
    }
}

/// Exponential prefactor `e^{iπ s H2²/4} q^{-s(H1²−H2²)/4}` for `s = ±1, ±2`.
fn gauss_prefactor(rep: &Rep, s: i64) -> Result<SMatrix> {
    let w = rep.weights()?;
    diag_by(rep.dim(), |i| {
        let (h1, h2) = (w.h1[i], w.h2[i]);
        Ok(&phase_quarter(s * h2 * h2)? * &q_quarter(-s * (h1 * h1 - h2 * h2))?)
    })
}

fn one_minus_q2() -> Scalar {
    &Scalar::one() - &Scalar::q_pow(2)
}

const E: [&str; 2] = ["K2", "X+"];
const F: [&str; 2] = ["K2^-1", "X-"];

fn cat<'a>(parts: &[&[&'a str]]) -> Vec<&'a str> {
    parts.concat()
}

/// Polynomial part of each element, multiplied on the left by its prefactor.
fn tail(rep: &Rep, e: RibbonElement) -> Result<Option<Element>> {
    let p = &rep.hopf.pres;
    let c = one_minus_q2();
    let k = ["K1", "K2"];
    let ki = ["K1^-1", "K2^-1"];
    let fe = cat(&[&F, &E]);
    let ef = cat(&[&E, &F]);
    let one: [&str; 0] = [];
    let el = match e {
        RibbonElement::U => lin(p, &[(Scalar::one(), &one), (c, &cat(&[&ki, &fe]))])?,
        RibbonElement::SU => lin(p, &[(Scalar::one(), &one), (c, &cat(&[&ef, &k]))])?,
        RibbonElement::SUInv => lin(p, &[(Scalar::one(), &one), (-c, &cat(&[&ef, &ki]))])?,
        RibbonElement::Z => {
            lin(p, &[(Scalar::one(), &one), (c.clone(), &cat(&[&k, &ef])), (c, &cat(&[&ki, &fe]))])?
        }
        RibbonElement::R => return Ok(None),
        RibbonElement::Nu => lin(p, &[(Scalar::one(), &k), (c, &cat(&[&k, &ki, &fe]))])?,
        RibbonElement::NuInv => lin(p, &[(Scalar::one(), &ki), (-c, &cat(&[&ki, &k, &fe]))])?,
    };
    Ok(Some(el))
}

/// The element evaluated on any representation of the standard structure that carries weights.
pub fn ribbon_on(rep: &Rep, e: RibbonElement) -> Result<SMatrix> {
    let pre = match e {
        RibbonElement::U | RibbonElement::SU | RibbonElement::Nu => gauss_prefactor(rep, 1)?,
        RibbonElement::SUInv | RibbonElement::NuInv => gauss_prefactor(rep, -1)?,
        RibbonElement::Z => gauss_prefactor(rep, 2)?,
        RibbonElement::R => {
            let w = rep.weights()?;
            return diag_by(rep.dim(), |i| Ok(&phase_quarter(-4 * w.h2[i])? * &q_quarter(-4 * (w.h1[i] + w.h2[i]))?));
        }
    };
    let t = tail(rep, e)?.expect("polynomial part");
    Ok(pre.mul(&rep.eval(&t)))
}

pub fn ribbon_eval(label: &RepLabel, e: RibbonElement) -> Result<SMatrix> {
    label.ints()?;
    ribbon_on(&rep_build(label)?, e)
}

/// Ribbon axioms and the closed forms of `u`, `S(u)`, `z`, `r`, `ν` on one label.
pub fn ribbon_identities(label: &RepLabel) -> Result<IdentitySet> {
    label.ints()?;
    let rep = rep_build(label)?;
    let h = rep.hopf.clone();
    let p = &h.pres;
    let n = rep.dim();
    let id = SMatrix::identity(n);
    let at = |e| ribbon_on(&rep, e);
    let (u, su, su_inv, z, r, nu, nu_inv) = (
        at(RibbonElement::U)?,
        at(RibbonElement::SU)?,
        at(RibbonElement::SUInv)?,
        at(RibbonElement::Z)?,
        at(RibbonElement::R)?,
        at(RibbonElement::Nu)?,
        at(RibbonElement::NuInv)?,
    );
    let mut set = IdentitySet::new(format!("ribbon structure on {label}"));
    let u_inv = u.inverse()?;
    let r_inv = r.inverse()?;
    for (x, g) in p.gens().iter().enumerate() {
        let a = &rep.images()[x];
        let gen = Element::letter(x as u8);
        let s2 = rep.eval(&h.antipode_pow(&gen, 2)?);
        let s4 = h.antipode_pow(&gen, 4)?;
        set.push(format!("u {0} u⁻¹ = S²({0})", g.name), u.mul(a).mul(&u_inv), s2);
        set.push(format!("r {0} r⁻¹ = S⁴({0})", g.name), r.mul(a).mul(&r_inv), rep.eval(&s4));
        set.push(format!("ν commutes with {}", g.name), nu.mul(a), a.mul(&nu));
        set.push(format!("z commutes with {}", g.name), z.mul(a), a.mul(&z));
        set.fact(s4 == gen, || format!("S⁴({}) = {} by rewriting", g.name, p.show(&s4)));
    }
    set.push("z = u S(u)", z.clone(), u.mul(&su));
    set.push("z = S(u) u", z.clone(), su.mul(&u));
    set.push("S(u) S(u)⁻¹ = 1", su.mul(&su_inv), id.clone());
    set.push("r = u S(u)⁻¹", r.clone(), u.mul(&su_inv));
    set.push("r = S(u)⁻¹ u", r.clone(), su_inv.mul(&u));
    set.push("ν² = z", nu.mul(&nu), z.clone());
    set.push("ν ν⁻¹ = 1", nu.mul(&nu_inv), id);

    let tt = rep.tensor(&rep)?;
    let rr = r_on(RKind::Standard, &rep, &rep)?;
    let tau = flip_matrix(&rep, &rep);
    let r21 = tau.mul(&rr).mul(&tau);
    set.push("Δν = (ℛ21ℛ)⁻¹(ν⊗ν)", ribbon_on(&tt, RibbonElement::Nu)?, r21.mul(&rr).inverse()?.mul(&nu.kron(&nu)));

    // The prefactor depends on H only through H², so S fixes it.
    let nu_tail = tail(&rep, RibbonElement::Nu)?.expect("polynomial part");
    let s_nu = rep.eval(&h.antipode(&nu_tail)?).mul(&gauss_prefactor(&rep, 1)?);
    set.push("S(ν) = ν", s_nu, nu.clone());
    let triv = Rep::trivial(h.clone())?;
    set.push("ε(ν) = 1", ribbon_on(&triv, RibbonElement::Nu)?, SMatrix::identity(1));

    let k1k2 = c1(p)?;
    let c1_inv2 = lin(p, &[(Scalar::one(), &["K1^-1", "K2^-1", "K1^-1", "K2^-1"])])?;
    set.push("r = (K1K2)⁻²", r, rep.eval(&c1_inv2));
    let prod = p.mul_all(&[&k1k2, &k1k2, &c1_inv2])?;
    set.fact(prod == Element::one(), || format!("(K1K2)²(K1K2)⁻² = {}", p.show(&prod)));
    let sq = p.mul(&k1k2, &k1k2)?;
    for g in p.gens() {
        let c = p.commutator(&sq, &p.g(&g.name)?)?;
        set.fact(c.is_zero(), || format!("[(K1K2)², {}] = {}", g.name, p.show(&c)));
    }
    Ok(set)
}

pub fn ribbon_check(label: &RepLabel) -> Result<Report> {
    Ok(ribbon_identities(label)?.exact_report())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_on_canonical_is_scalar() {
        let r = ribbon_eval(&RepLabel::Int(1, 0), RibbonElement::R).unwrap();
        assert_eq!(r, SMatrix::identity(2).scale(&Scalar::q_pow(-2)));
        let rep = rep_build(&RepLabel::Int(1, 0)).unwrap();
        let c = rep.image("K1").unwrap().mul(rep.image("K2").unwrap());
        assert_eq!(r, c.mul(&c).inverse().unwrap());
    }

    #[test]
    fn ribbon_labels() {
        for (a, b) in [(1, 0), (2, 1), (1, 1), (0, 1)] {
            let rep = ribbon_check(&RepLabel::Int(a, b)).unwrap();
            assert!(rep.ok(), "[{a},{b}]: {:?}", rep.failures);
        }
    }

    #[test]
    fn counit_of_nu() {
        let h = RKind::Standard.hopf().unwrap();
        let t = Rep::trivial(h).unwrap();
        assert_eq!(ribbon_on(&t, RibbonElement::Nu).unwrap(), SMatrix::identity(1));
    }

    #[test]
    fn element_names_round_trip() {
        for e in RibbonElement::ALL {
            assert_eq!(e.name().parse::<RibbonElement>().unwrap(), e);
        }
    }
}
