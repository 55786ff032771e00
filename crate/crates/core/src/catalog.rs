//! Built-in algebras: the two-parameter non-standard quantum group on `K1, K2, g, X±`,
//! its twisted coproduct, and the super Hopf algebra `U_q gl(1|1)` on `Qh, QN, η, η⁺`.
//!
//! Generator order puts inverses first, group-likes before nilpotents, so every
//! relation orients from left to right as a decreasing rule.

use crate::error::Result;
use crate::gtensor::{Mode, TensorElement};
use crate::hopfcore::{AlgebraMap, HopfData};
use crate::ncalg::{Element, Pres, Presentation, Skeleton, DEFAULT_STEP_CAP};
use crate::scalars::Scalar;

/// Linear combination of named words in a skeleton.
fn sk_lin(sk: &Skeleton, terms: &[(Scalar, &[&str])]) -> Element {
    let mut e = Element::zero();
    for (c, names) in terms {
        let w = names.iter().map(|n| sk.index(n).unwrap_or_else(|| panic!("no generator {n}"))).collect();
        e.add_term(w, c);
    }
    e
}

/// Linear combination of named words, normal-formed in `p`.
pub fn lin(p: &Presentation, terms: &[(Scalar, &[&str])]) -> Result<Element> {
    let mut e = Element::zero();
    for (c, names) in terms {
        e.add_scaled(&p.w(names)?, c);
    }
    p.normal_form(&e)
}

/// Sum of `c · A ⊗ B` over named words.
pub fn tens(p: &Presentation, mode: Mode, terms: &[(Scalar, &[&str], &[&str])]) -> Result<TensorElement> {
    let mut t = TensorElement::zero(2, mode);
    for (c, a, b) in terms {
        let (a, b) = (p.w(a)?, p.w(b)?);
        t.add_scaled(&TensorElement::pure(&[&a, &b], mode), c);
    }
    t.normalize(p)
}

fn q(n: i32) -> Scalar {
    Scalar::q_pow(n)
}

fn int(n: i64) -> Scalar {
    Scalar::from_i64(n)
}

/// `1/(q − q⁻¹)`.
fn inv_lambda() -> Scalar {
    Scalar::q_minus_qinv().inv().expect("q - 1/q is nonzero")
}

pub fn uq_skeleton() -> Skeleton {
    let mut sk = Skeleton::new("U_q(K1,K2,g,X±)");
    sk.invertible("K1");
    sk.invertible("K2");
    let g = sk.gen("g", 0);
    sk.gens[g as usize].inverse = Some(g);
    let xp = sk.gen("X+", 0);
    let xm = sk.gen("X-", 0);
    sk.nilpotent(xp);
    sk.nilpotent(xm);
    let ix = |sk: &Skeleton, n: &str| sk.index(n).unwrap();
    // K's commute with each other and with g.
    for (a, b) in [("K2", "K1"), ("K2", "K1^-1"), ("K2^-1", "K1"), ("K2^-1", "K1^-1")] {
        let r = sk_lin(&sk, &[(int(1), &[b, a])]);
        sk.rule(ix(&sk, a), ix(&sk, b), r);
    }
    for k in ["K1", "K1^-1", "K2", "K2^-1"] {
        let r = sk_lin(&sk, &[(int(1), &[k, "g"])]);
        sk.rule(g, ix(&sk, k), r);
    }
    let table: [(&str, &str, Scalar); 8] = [
        ("X+", "K1", q(-1)),
        ("X+", "K1^-1", q(1)),
        ("X-", "K1", q(1)),
        ("X-", "K1^-1", q(-1)),
        ("X+", "K2", -q(1)),
        ("X+", "K2^-1", -q(-1)),
        ("X-", "K2", -q(-1)),
        ("X-", "K2^-1", -q(1)),
    ];
    for (x, k, c) in table {
        let r = sk_lin(&sk, &[(c, &[k, x])]);
        sk.rule(ix(&sk, x), ix(&sk, k), r);
    }
    for x in ["X+", "X-"] {
        let r = sk_lin(&sk, &[(int(-1), &["g", x])]);
        sk.rule(ix(&sk, x), g, r);
    }
    let l = inv_lambda();
    let r = sk_lin(&sk, &[(int(1), &["X+", "X-"]), (-&l, &["K1", "K2"]), (l, &["K1^-1", "K2^-1"])]);
    sk.rule(xm, xp, r);
    sk
}

pub fn uq_presentation() -> Result<Pres> {
    Ok(Presentation::from_skeleton(uq_skeleton(), DEFAULT_STEP_CAP)?.into_pres())
}

type GenMaps = Vec<(&'static str, TensorElement, Scalar, Option<Element>)>;

fn group_like_maps(p: &Pres, mode: Mode, names: &[(&'static str, &'static str)]) -> Result<GenMaps> {
    names
        .iter()
        .map(|&(x, inv)| Ok((x, tens(p, mode, &[(int(1), &[x], &[x])])?, int(1), Some(p.g(inv)?))))
        .collect()
}

fn assemble(name: &str, p: Pres, mode: Mode, maps: GenMaps, g: Option<&str>) -> Result<HopfData> {
    HopfData::from_named(name, p.clone(), mode, &maps, g)
}

const UQ_GROUP: [(&str, &str); 5] = [("K1", "K1^-1"), ("K1^-1", "K1"), ("K2", "K2^-1"), ("K2^-1", "K2"), ("g", "g")];

/// The quasitriangular Hopf algebra with `ΔX⁺ = X⁺⊗K1 + K2⁻¹⊗X⁺`, `ΔX⁻ = X⁻⊗K2 + K1⁻¹⊗X⁻`.
pub fn uq_hopf() -> Result<HopfData> {
    let p = uq_presentation()?;
    let m = Mode::Bosonic;
    let mut maps = group_like_maps(&p, m, &UQ_GROUP)?;
    maps.push((
        "X+",
        tens(&p, m, &[(int(1), &["X+"], &["K1"]), (int(1), &["K2^-1"], &["X+"])])?,
        int(0),
        Some(lin(&p, &[(-q(1), &["K1^-1", "K2", "X+"])])?),
    ));
    maps.push((
        "X-",
        tens(&p, m, &[(int(1), &["X-"], &["K2"]), (int(1), &["K1^-1"], &["X-"])])?,
        int(0),
        Some(lin(&p, &[(q(1), &["K1", "K2^-1", "X-"])])?),
    ));
    assemble("U_q(K1,K2,g,X±)", p, m, maps, Some("g"))
}

/// Same algebra, coproduct twisted by the cocycle `q^{H2⊗(H1+H2)/4}`.
pub fn uq_omega_hopf() -> Result<HopfData> {
    let p = uq_presentation()?;
    let m = Mode::Bosonic;
    let mut maps = group_like_maps(&p, m, &UQ_GROUP)?;
    maps.push((
        "X+",
        tens(&p, m, &[(int(1), &["X+"], &["K2^-1", "g"]), (int(1), &["K2^-1"], &["X+"])])?,
        int(0),
        Some(lin(&p, &[(-q(1), &["g", "K2", "K2", "X+"])])?),
    ));
    maps.push((
        "X-",
        tens(&p, m, &[(int(1), &["X-"], &["g", "K1", "K2", "K2"]), (int(1), &["K1^-1"], &["X-"])])?,
        int(0),
        Some(lin(&p, &[(q(1), &["g", "K2^-1", "K2^-1", "X-"])])?),
    ));
    assemble("U_q^Ω(K1,K2,g,X±)", p, m, maps, Some("g"))
}

/// `c1 = K1K2`, which anticommutes with `X±`.
pub fn c1(p: &Presentation) -> Result<Element> {
    lin(p, &[(int(1), &["K1", "K2"])])
}

/// `c2 = X⁺X⁻ − ½(K1K2 − K1⁻¹K2⁻¹)/(q − q⁻¹)`.
pub fn c2(p: &Presentation) -> Result<Element> {
    let h = &Scalar::from_ratio(1, 2) * &inv_lambda();
    lin(p, &[(int(1), &["X+", "X-"]), (-&h, &["K1", "K2"]), (h, &["K1^-1", "K2^-1"])])
}

pub fn gl11_skeleton() -> Skeleton {
    let mut sk = Skeleton::new("U_q gl(1|1)");
    sk.invertible("Qh");
    sk.invertible("QN");
    let eta = sk.gen("eta", 1);
    let etp = sk.gen("eta+", 1);
    sk.nilpotent(eta);
    sk.nilpotent(etp);
    let ix = |sk: &Skeleton, n: &str| sk.index(n).unwrap();
    for a in ["QN", "QN^-1", "eta", "eta+"] {
        for h in ["Qh", "Qh^-1"] {
            let r = sk_lin(&sk, &[(int(1), &[h, a])]);
            sk.rule(ix(&sk, a), ix(&sk, h), r);
        }
    }
    let table: [(&str, &str, Scalar); 4] =
        [("eta", "QN", q(1)), ("eta", "QN^-1", q(-1)), ("eta+", "QN", q(-1)), ("eta+", "QN^-1", q(1))];
    for (x, k, c) in table {
        let r = sk_lin(&sk, &[(c, &[k, x])]);
        sk.rule(ix(&sk, x), ix(&sk, k), r);
    }
    let l = inv_lambda();
    let r = sk_lin(&sk, &[(int(-1), &["eta", "eta+"]), (l.clone(), &["Qh"]), (-&l, &["Qh^-1"])]);
    sk.rule(etp, eta, r);
    sk
}

pub fn gl11_presentation() -> Result<Pres> {
    Ok(Presentation::from_skeleton(gl11_skeleton(), DEFAULT_STEP_CAP)?.into_pres())
}

const GL11_GROUP: [(&str, &str); 4] = [("Qh", "Qh^-1"), ("Qh^-1", "Qh"), ("QN", "QN^-1"), ("QN^-1", "QN")];

/// `Δη = η⊗QhQN⁻¹ + QN⁻¹⊗η`, `Δη⁺ = η⁺⊗QN + Qh⁻¹QN⊗η⁺`.
pub fn gl11_hopf() -> Result<HopfData> {
    let p = gl11_presentation()?;
    let m = Mode::Super;
    let mut maps = group_like_maps(&p, m, &GL11_GROUP)?;
    maps.push((
        "eta",
        tens(&p, m, &[(int(1), &["eta"], &["Qh", "QN^-1"]), (int(1), &["QN^-1"], &["eta"])])?,
        int(0),
        Some(lin(&p, &[(-q(1), &["Qh^-1", "QN", "QN", "eta"])])?),
    ));
    maps.push((
        "eta+",
        tens(&p, m, &[(int(1), &["eta+"], &["QN"]), (int(1), &["Qh^-1", "QN"], &["eta+"])])?,
        int(0),
        Some(lin(&p, &[(-q(1), &["Qh", "QN^-1", "QN^-1", "eta+"])])?),
    ));
    assemble("U_q gl(1|1)", p, m, maps, None)
}

/// Twisted super coproduct: `Δη = η⊗QN⁻¹ + QN⁻¹⊗η`, `Δη⁺ = η⁺⊗QhQN + Qh⁻¹QN⊗η⁺`.
pub fn gl11_omega_hopf() -> Result<HopfData> {
    let p = gl11_presentation()?;
    let m = Mode::Super;
    let mut maps = group_like_maps(&p, m, &GL11_GROUP)?;
    maps.push((
        "eta",
        tens(&p, m, &[(int(1), &["eta"], &["QN^-1"]), (int(1), &["QN^-1"], &["eta"])])?,
        int(0),
        Some(lin(&p, &[(-q(1), &["QN", "QN", "eta"])])?),
    ));
    maps.push((
        "eta+",
        tens(&p, m, &[(int(1), &["eta+"], &["Qh", "QN"]), (int(1), &["Qh^-1", "QN"], &["eta+"])])?,
        int(0),
        Some(lin(&p, &[(-q(1), &["QN^-1", "QN^-1", "eta+"])])?),
    ));
    assemble("U_q^Ω gl(1|1)", p, m, maps, None)
}

/// `Qh ↦ K1K2g`, `QN ↦ K2g`, `η ↦ X⁺`, `η⁺ ↦ X⁻g`, into the superization of `uq`.
pub fn gl11_dictionary(gl11: &Pres, uq_super: &Pres) -> Result<AlgebraMap> {
    let u = uq_super;
    let one = int(1);
    let images = [
        ("Qh", lin(u, &[(one.clone(), &["K1", "K2", "g"])])?),
        ("Qh^-1", lin(u, &[(one.clone(), &["K1^-1", "K2^-1", "g"])])?),
        ("QN", lin(u, &[(one.clone(), &["K2", "g"])])?),
        ("QN^-1", lin(u, &[(one.clone(), &["K2^-1", "g"])])?),
        ("eta", lin(u, &[(one.clone(), &["X+"])])?),
        ("eta+", lin(u, &[(one, &["X-", "g"])])?),
    ];
    AlgebraMap::from_named(gl11.clone(), u.clone(), &images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::{casimir_central_check, check_hopf_axioms, hopf_map_check, superize, HopfCheckOptions};

    fn opts() -> HopfCheckOptions {
        HopfCheckOptions { exhaustive_len: 2, random_words: 10, seed: 3 }
    }

    #[test]
    fn uq_basic_rules() {
        let p = uq_presentation().unwrap();
        assert!(p.normal_form(&p.w(&["X+", "X+"]).unwrap()).unwrap().is_zero());
        assert!(p.normal_form(&p.w(&["K1", "K1^-1"]).unwrap()).unwrap() == Element::one());
        let lhs = p.normal_form(&p.w(&["X+", "X-"]).unwrap()).unwrap();
        assert_eq!(lhs, p.w(&["X+", "X-"]).unwrap());
        let xmxp = p.normal_form(&p.w(&["X-", "X+"]).unwrap()).unwrap();
        let l = inv_lambda();
        let expect = lin(&p, &[(int(1), &["X+", "X-"]), (-&l, &["K1", "K2"]), (l, &["K1^-1", "K2^-1"])]).unwrap();
        assert_eq!(xmxp, expect);
    }

    #[test]
    fn all_hopf_axioms() {
        for h in [uq_hopf(), uq_omega_hopf(), gl11_hopf(), gl11_omega_hopf()] {
            let h = h.unwrap();
            let r = check_hopf_axioms(&h, opts()).unwrap();
            assert!(r.ok(), "{}: {:?}", h.name, r.failures);
        }
    }

    #[test]
    fn corrupted_coproduct_detected() {
        let mut h = uq_hopf().unwrap();
        let xp = h.pres.idx("X+").unwrap();
        let bad = h.tensor(&[&["X+"], &["K2"]]).unwrap();
        h.override_delta(xp, bad).unwrap();
        let r = check_hopf_axioms(&h, opts()).unwrap();
        assert!(r.failures.iter().any(|f| f.contains("coproduct not compatible")));
    }

    #[test]
    fn superization_matches_gl11() {
        for (bos, sup) in [(uq_hopf(), gl11_hopf()), (uq_omega_hopf(), gl11_omega_hopf())] {
            let s = superize(&bos.unwrap()).unwrap();
            let sup = sup.unwrap();
            let phi = gl11_dictionary(&sup.pres, &s.pres).unwrap();
            let r = hopf_map_check(&sup, &s, &phi).unwrap();
            assert!(r.ok(), "{:?}", r.failures);
        }
    }

    #[test]
    fn casimirs() {
        let h = uq_hopf().unwrap();
        let p = &h.pres;
        let c = c1(p).unwrap();
        let c_sq = p.mul(&c, &c).unwrap();
        assert!(casimir_central_check(&h, &c_sq).unwrap().ok());
        assert!(casimir_central_check(&h, &c2(p).unwrap()).unwrap().ok());
        assert!(!casimir_central_check(&h, &c).unwrap().ok());
        for x in ["X+", "X-"] {
            assert!(p.anticommutator(&c, &p.g(x).unwrap()).unwrap().is_zero());
        }
    }
}
