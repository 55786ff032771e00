use super::det::{eval_matrix, matrix_rep_check};
use super::OperatorMatrix;
use crate::error::{QgwError, Result};
use crate::linalg::SMatrix;
use crate::ncalg::Presentation;
use crate::report::Report;
use crate::rmatlab::RMatrix;
use crate::scalars::Scalar;

fn sgn(bits: u8) -> Scalar {
    if bits & 1 == 1 {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// `⟨t^i_j, l⁺^k_l⟩ = R^i_j^k_l` and `⟨t^i_j, l⁻^k_l⟩ = (R⁻¹)^k_l^i_j`, as matrices
/// in `(i, j)` indexed `n·k + l`. For a super `R` the factors
/// `(-1)^{p(j)(p(k)+p(l))}` and `(-1)^{p(k)(p(i)+p(j))}` are included.
pub fn pairing_matrices(r: &RMatrix, plus: bool) -> Result<Vec<SMatrix>> {
    let n = r.dim();
    let inv = r.inverse()?;
    let p = |i: usize| if r.is_super() { r.p(i) } else { 0 };
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        for l in 0..n {
            out.push(SMatrix::from_fn(n, n, |i, j| {
                if plus {
                    r.get(i, j, k, l) * &sgn(p(j) * (p(k) + p(l)))
                } else {
                    inv.get(k * n + i, l * n + j) * &sgn(p(k) * (p(i) + p(j)))
                }
            }));
        }
    }
    Ok(out)
}

/// Pairing matrices turned into matrices of a right action on a graded basis:
/// an element of degree `e` picks up `(-1)^{e·p(j)}` in column `j`.
pub fn graded_pairing(r: &RMatrix, plus: bool) -> Result<Vec<SMatrix>> {
    let n = r.dim();
    let raw = pairing_matrices(r, plus)?;
    Ok(raw
        .into_iter()
        .enumerate()
        .map(|(kl, m)| {
            let e = if r.is_super() { r.p(kl / n) + r.p(kl % n) } else { 0 };
            SMatrix::from_fn(n, n, |i, j| m.get(i, j) * &sgn(e * r.p(j)))
        })
        .collect())
}

/// Solves for generator matrices from single-term entries, repeating until no
/// entry has exactly one unknown letter.
fn derive_images(
    p: &Presentation,
    pairs: &[(&OperatorMatrix, &[SMatrix])],
    known: &[(&str, SMatrix)],
) -> Result<Vec<Option<SMatrix>>> {
    let mut img: Vec<Option<SMatrix>> = vec![None; p.ngens()];
    let set = |img: &mut Vec<Option<SMatrix>>, x: u8, m: SMatrix| -> Result<()> {
        if let Some(inv) = p.gens()[x as usize].inverse {
            img[inv as usize] = Some(m.inverse()?);
        }
        img[x as usize] = Some(m);
        Ok(())
    };
    for (name, m) in known {
        set(&mut img, p.idx(name)?, m.clone())?;
    }
    loop {
        let mut progress = false;
        for (op, mats) in pairs {
            let n = op.dim();
            for i in 0..n {
                for j in 0..n {
                    let e = op.get(i, j);
                    if e.len() != 1 {
                        continue;
                    }
                    let (w, c) = e.terms().next().expect("one term");
                    let unknown: Vec<usize> = (0..w.len()).filter(|&k| img[w[k] as usize].is_none()).collect();
                    if unknown.len() != 1 || w.iter().filter(|&&x| x == w[unknown[0]]).count() != 1 {
                        continue;
                    }
                    let k = unknown[0];
                    let prod = |ws: &[u8]| -> SMatrix {
                        ws.iter().fold(SMatrix::identity(n), |acc, &x| acc.mul(img[x as usize].as_ref().expect("known")))
                    };
                    let target = mats[i * n + j].scale(&c.inv()?);
                    let solved = prod(&w[..k]).inverse()?.mul(&target).mul(&prod(&w[k + 1..]).inverse()?);
                    set(&mut img, w[k], solved)?;
                    progress = true;
                }
            }
        }
        if !progress {
            return Ok(img);
        }
    }
}

/// Builds generator matrices from the pairing of `A(R)` with the operator
/// matrices `plus`, `minus`, checks every entry is reproduced, and checks the
/// matrices satisfy all relations. Generators not fixed by the pairing are
/// taken from `known`.
pub fn duality_pairing_check(
    r: &RMatrix,
    plus: &OperatorMatrix,
    minus: &OperatorMatrix,
    known: &[(&str, SMatrix)],
    graded: bool,
) -> Result<(Report, Vec<SMatrix>)> {
    let p = &plus.pres;
    let (pm, mm) = if graded {
        (graded_pairing(r, true)?, graded_pairing(r, false)?)
    } else {
        (pairing_matrices(r, true)?, pairing_matrices(r, false)?)
    };
    let img = derive_images(p, &[(plus, &pm), (minus, &mm)], known)?;
    let mut rep = Report::new(format!("pairing of {} with {}", r.name, p.name));
    let missing: Vec<&str> =
        img.iter().zip(p.gens()).filter(|(m, _)| m.is_none()).map(|(_, g)| g.name.as_str()).collect();
    if !missing.is_empty() {
        return Err(QgwError::NotSolvable(format!("pairing leaves {} undetermined", missing.join(", "))));
    }
    let img: Vec<SMatrix> = img.into_iter().map(|m| m.expect("derived")).collect();
    for (op, mats) in [(plus, &pm), (minus, &mm)] {
        let n = op.dim();
        for i in 0..n {
            for j in 0..n {
                let got = eval_matrix(op.get(i, j), &img);
                rep.expect(got == mats[i * n + j], || format!("{}[{i}][{j}] pairs to {}", op.label, got.show()));
            }
        }
    }
    rep.absorb(matrix_rep_check(p, &img, "pairing"));
    Ok((rep, img))
}

#[cfg(test)]
mod tests {
    use super::super::{l_omega, l_standard, m_omega, m_standard};
    use super::*;
    use crate::catalog::{gl11_presentation, uq_presentation};
    use crate::rmatlab::catalog;

    fn e(n: usize, i: usize, j: usize) -> SMatrix {
        SMatrix::unit(n, i, j)
    }

    fn diag(a: Scalar, b: Scalar) -> SMatrix {
        SMatrix::diag(&[a, b])
    }

    #[test]
    fn ac_canonical_representation() {
        let p = uq_presentation().unwrap();
        let (lp, lm) = l_standard(&p).unwrap();
        let g = diag(Scalar::one(), -Scalar::one());
        let (rep, img) =
            duality_pairing_check(&catalog::alexander_conway().unwrap(), &lp, &lm, &[("g", g)], false).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
        let at = |s: &str| img[p.idx(s).unwrap() as usize].clone();
        assert_eq!(at("K1"), diag(Scalar::q(), Scalar::one()));
        assert_eq!(at("K2"), diag(Scalar::one(), -Scalar::q()));
        assert_eq!(at("X+"), e(2, 0, 1));
        assert_eq!(at("X-"), e(2, 1, 0));
    }

    #[test]
    fn omega_pairing() {
        let p = uq_presentation().unwrap();
        let (lp, lm) = l_omega(&p).unwrap();
        let known = [("g", diag(Scalar::one(), -Scalar::one())), ("K2", diag(Scalar::one(), -Scalar::q()))];
        let (rep, _) = duality_pairing_check(&catalog::r_omega().unwrap(), &lp, &lm, &known, false).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn identity_pairing_is_diagonal() {
        let r = catalog::identity(2).unwrap();
        for m in pairing_matrices(&r, true).unwrap().into_iter().chain(pairing_matrices(&r, false).unwrap()) {
            assert!(m.is_diagonal());
        }
    }

    #[test]
    fn super_pairings() {
        let p = gl11_presentation().unwrap();
        let (mp, mm) = m_standard(&p).unwrap();
        let (rep, _) =
            duality_pairing_check(&catalog::alexander_conway_super().unwrap(), &mp, &mm, &[], true).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
        let (mp, mm) = m_omega(&p).unwrap();
        let known = [("QN", diag(Scalar::one(), Scalar::q()))];
        let (rep, img) = duality_pairing_check(&catalog::r_omega_super().unwrap(), &mp, &mm, &known, true).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
        // Right action on (x, dx).
        let at = |s: &str| img[p.idx(s).unwrap() as usize].clone();
        let q = Scalar::q();
        assert_eq!(at("Qh"), diag(q.clone(), q.clone()));
        assert_eq!(at("eta"), e(2, 0, 1).scale(&Scalar::q_pow(-1)));
        assert_eq!(at("eta+"), e(2, 1, 0).scale(&q));
    }

    #[test]
    fn untwisted_super_pairing_is_not_a_representation() {
        let p = gl11_presentation().unwrap();
        let (mp, mm) = m_omega(&p).unwrap();
        let known = [("QN", diag(Scalar::one(), Scalar::q()))];
        let (rep, _) = duality_pairing_check(&catalog::r_omega_super().unwrap(), &mp, &mm, &known, false).unwrap();
        assert!(!rep.ok());
    }
}
