use crate::error::{QgwError, Result};
use crate::gtensor::{TensorElement, TensorSquare};
use crate::hopfcore::{casimir_central_check, HopfData};
use crate::linalg::SMatrix;
use crate::ncalg::{Element, Presentation};
use crate::report::Report;
use crate::rmatlab::RMatrix;
use crate::scalars::Scalar;

/// `𝒟 = ad⁻¹ − bd⁻¹cd⁻¹`.
pub fn qdet(p: &Presentation) -> Result<Element> {
    if p.index("a^-1").is_none() || p.index("d^-1").is_none() {
        return Err(QgwError::NoInverses);
    }
    crate::catalog::lin(p, &[(Scalar::one(), &["a", "d^-1"]), (-Scalar::one(), &["b", "d^-1", "c", "d^-1"])])
}

/// `ρ⁺(t^k_l)_ij = R^k_l^i_j` or `ρ⁻(t^k_l)_ij = (R⁻¹)^i_j^k_l`, indexed `n·k + l`.
pub fn rho_matrices(r: &RMatrix, plus: bool) -> Result<Vec<SMatrix>> {
    let n = r.dim();
    let inv = r.inverse()?;
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        for l in 0..n {
            out.push(SMatrix::from_fn(n, n, |i, j| {
                if plus {
                    r.get(k, l, i, j).clone()
                } else {
                    inv.get(i * n + k, j * n + l).clone()
                }
            }));
        }
    }
    Ok(out)
}

/// Images of every generator of a `2×2` quantum matrix algebra with inverses.
fn extend_to_inverses(p: &Presentation, t: &[SMatrix]) -> Result<Vec<SMatrix>> {
    let by_name = |s: &str| -> Result<SMatrix> {
        Ok(match s {
            "a" => t[0].clone(),
            "b" => t[1].clone(),
            "c" => t[2].clone(),
            "d" => t[3].clone(),
            "a^-1" => t[0].inverse()?,
            "d^-1" => t[3].inverse()?,
            other => return Err(QgwError::UnknownName(other.into())),
        })
    };
    p.gens().iter().map(|g| by_name(&g.name)).collect()
}

pub fn eval_matrix(e: &Element, images: &[SMatrix]) -> SMatrix {
    let n = images.first().map_or(1, |m| m.rows());
    let mut out = SMatrix::zeros(n, n);
    for (w, c) in e.terms() {
        let mut m = SMatrix::identity(n);
        for &x in w {
            m = m.mul(&images[x as usize]);
        }
        out = out.add(&m.scale(c));
    }
    out
}

/// Every rewrite rule holds between the matrix images.
pub fn matrix_rep_check(p: &Presentation, images: &[SMatrix], label: &str) -> Report {
    let mut rep = Report::new(format!("{label} represents {}", p.name));
    for ((a, b), rhs) in p.rule_list() {
        let l = images[a as usize].mul(&images[b as usize]);
        let r = eval_matrix(rhs, images);
        rep.expect(l == r, || format!("rule {} violated", p.word_string(&[a, b])));
    }
    rep
}

fn grouplike(h: &HopfData, e: &Element) -> Result<bool> {
    let d = h.coproduct(e)?;
    Ok(d == TensorElement::pure(&[e, e], h.mode))
}

/// Commutation pattern, group-likeness, `𝒟²` central, the failing centrality of `𝒟`,
/// multiplicativity on two commuting copies, and `ρ±(𝒟²) = q^{±2}` when `r` is given.
pub fn qdet_check(h: &HopfData, r: Option<&RMatrix>) -> Result<Report> {
    let p = &h.pres;
    let dd = qdet(p)?;
    let mut rep = Report::new(format!("quantum determinant of {}", h.name));
    for x in ["a", "d", "a^-1", "d^-1"] {
        let c = p.commutator(&dd, &p.g(x)?)?;
        rep.expect(c.is_zero(), || format!("[𝒟, {x}] = {}", p.show(&c)));
    }
    for x in ["b", "c"] {
        let c = p.anticommutator(&dd, &p.g(x)?)?;
        rep.expect(c.is_zero(), || format!("{{𝒟, {x}}} = {}", p.show(&c)));
    }
    rep.expect(grouplike(h, &dd)?, || "𝒟 is not group-like".into());
    let d2 = p.mul(&dd, &dd)?;
    rep.absorb(casimir_central_check(h, &d2)?);
    rep.expect(grouplike(h, &d2)?, || "𝒟² is not group-like".into());
    let central = casimir_central_check(h, &dd)?;
    rep.expect(!central.ok(), || "𝒟 passed as central".into());
    rep.absorb(multiplicativity_check(h)?);
    if let Some(r) = r {
        let q = Scalar::q();
        for (plus, want) in [(true, q.clone()), (false, q.inv()?)] {
            let sign = if plus { "+" } else { "-" };
            let images = extend_to_inverses(p, &rho_matrices(r, plus)?)?;
            rep.absorb(matrix_rep_check(p, &images, &format!("ρ{sign}")));
            let v = eval_matrix(&d2, &images);
            let target = SMatrix::identity(2).scale(&(&want * &want));
            rep.expect(v == target, || format!("ρ{sign}(𝒟²) = {}", v.show()));
        }
    }
    Ok(rep)
}

/// `𝒟(t·t′) = 𝒟(t)𝒟(t′)` for two commuting copies `t`, `t′`.
fn multiplicativity_check(h: &HopfData) -> Result<Report> {
    let p = &h.pres;
    let ts = TensorSquare::new(p, h.mode)?;
    let mut rep = Report::new("𝒟 multiplicative on commuting copies");
    let gen = |s: &str, primed: bool| -> Result<Element> {
        let t = if primed {
            TensorElement::pure(&[&Element::one(), &p.g(s)?], h.mode)
        } else {
            TensorElement::pure(&[&p.g(s)?, &Element::one()], h.mode)
        };
        ts.embed(&t)
    };
    let tp = &ts.pres;
    let entry = |i: usize, j: usize| -> Result<Element> {
        let names = [["a", "b"], ["c", "d"]];
        let mut acc = Element::zero();
        for k in 0..2 {
            acc = acc.add(&tp.mul(&gen(names[i][k], false)?, &gen(names[k][j], true)?)?);
        }
        Ok(acc)
    };
    let (a2, b2, c2, d2) = (entry(0, 0)?, entry(0, 1)?, entry(1, 0)?, entry(1, 1)?);
    let Some(d2i) = tp.unipotent_inverse(&d2, 16)? else {
        rep.fail("product diagonal entry is not unipotent");
        return Ok(rep);
    };
    let lhs = tp.mul(&a2, &d2i)?.sub(&tp.mul_all(&[&b2, &d2i, &c2, &d2i])?);
    let dd = qdet(p)?;
    let rhs = ts.embed(&TensorElement::pure(&[&dd, &dd], h.mode))?;
    rep.expect(lhs == rhs, || format!("residual {}", tp.show(&lhs.sub(&rhs))));
    Ok(rep)
}

/// The even superdeterminant `αδ⁻¹ − βδ⁻¹γδ⁻¹` is central, even and group-like.
pub fn super_det_check(h: &HopfData) -> Result<Report> {
    let p = &h.pres;
    let sd = qdet(p)?;
    let mut rep = Report::new(format!("superdeterminant of {}", h.name));
    rep.expect(p.degree(&sd) == Some(0), || "superdeterminant is not even".into());
    rep.absorb(casimir_central_check(h, &sd)?);
    rep.expect(grouplike(h, &sd)?, || "superdeterminant is not group-like".into());
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::super::{a_r_presentation, quantum_matrix_hopf, with_inverses_2x2};
    use super::*;
    use crate::gtensor::Mode;
    use crate::rmatlab::catalog;

    fn hopf(r: &RMatrix, mode: Mode) -> HopfData {
        let p = a_r_presentation(r).unwrap();
        let (pi, _) = with_inverses_2x2(&p).unwrap();
        quantum_matrix_hopf(&pi, mode).unwrap()
    }

    #[test]
    fn ac_determinant() {
        let r = catalog::alexander_conway().unwrap();
        let h = hopf(&r, Mode::Bosonic);
        let rep = qdet_check(&h, Some(&r)).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn rho_values() {
        let r = catalog::alexander_conway().unwrap();
        let plus = rho_matrices(&r, true).unwrap();
        let q = Scalar::q();
        assert_eq!(plus[0], SMatrix::diag(&[q.clone(), Scalar::one()]));
        assert_eq!(plus[3], SMatrix::diag(&[Scalar::one(), -Scalar::q_pow(-1)]));
        assert!(plus[2].is_zero());
    }

    #[test]
    fn superdeterminants() {
        for r in [catalog::alexander_conway_super().unwrap(), catalog::r_omega_super().unwrap()] {
            let h = hopf(&r, Mode::Super);
            let rep = super_det_check(&h).unwrap();
            assert!(rep.ok(), "{}: {:?}", r.name, rep.failures);
        }
    }

    #[test]
    fn no_inverses_error() {
        let p = a_r_presentation(&catalog::alexander_conway().unwrap()).unwrap();
        assert_eq!(qdet(&p), Err(QgwError::NoInverses));
    }
}
