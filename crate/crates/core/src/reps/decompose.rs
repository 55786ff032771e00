use super::{rep_with_g, IdentitySet, RKind, Rep, RepLabel};
use crate::error::{QgwError, Result};
use crate::linalg::SMatrix;
use crate::scalars::Scalar;

/// `A⊗B ≅ P1 ⊕ P2` with `M⁻¹ π_{A⊗B}(x) M = π_{P1}(x) ⊕ π_{P2}(x)`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub first: RepLabel,
    pub second: RepLabel,
    pub intertwiner: SMatrix,
    pub identities: IdentitySet,
}

fn as_symbolic(l: &RepLabel) -> Result<RepLabel> {
    let (a, b) = l.lambdas()?;
    Ok(RepLabel::Sym(a, b))
}

fn block_diag(a: &SMatrix, b: &SMatrix) -> SMatrix {
    let (n, m) = (a.rows(), b.rows());
    SMatrix::from_fn(n + m, n + m, |i, j| match (i < n, j < n) {
        (true, true) => a.get(i, j).clone(),
        (false, false) => b.get(i - n, j - n).clone(),
        _ => Scalar::zero(),
    })
}

/// All `M` with `T(x) M = M D(x)` for every generator, as a basis of matrices.
fn intertwiners(t: &Rep, d: &[SMatrix]) -> Vec<SMatrix> {
    let n = t.dim();
    let gens = t.images().len();
    let mut sys = SMatrix::zeros(gens * n * n, n * n);
    for (x, dx) in d.iter().enumerate() {
        let tx = &t.images()[x];
        for i in 0..n {
            for j in 0..n {
                let row = x * n * n + i * n + j;
                for k in 0..n {
                    let a = sys.get(row, k * n + j) + tx.get(i, k);
                    sys.set(row, k * n + j, a);
                    let b = sys.get(row, i * n + k) - dx.get(k, j);
                    sys.set(row, i * n + k, b);
                }
            }
        }
    }
    sys.null_space().into_iter().map(|v| SMatrix::from_fn(n, n, |i, j| v[i * n + j].clone())).collect()
}

/// Splits `(λ1,λ2)⊗(μ1,μ2)` into `(λ1μ1, λ2μ2) ⊕ (q⁻¹λ1μ1, −qλ2μ2)` with an exact intertwiner.
pub fn tensor_decompose(l1: &RepLabel, l2: &RepLabel) -> Result<Decomposition> {
    let (a, b) = (as_symbolic(l1)?, as_symbolic(l2)?);
    let (la, lb) = (a.lambdas()?, b.lambdas()?);
    let p1 = &la.0 * &lb.0;
    let p2 = &la.1 * &lb.1;
    let first = RepLabel::Sym(p1.clone(), p2.clone());
    let second = RepLabel::Sym(&Scalar::q_pow(-1) * &p1, -(&Scalar::q() * &p2));
    first.validate()?;
    second.validate()?;
    // g is not fixed by (λ1, λ2): it is e^{iπH2/2}, whose sign flips on the second summand.
    let (sa, sb) = (l1.g_sign(), l2.g_sign());
    let t = rep_with_g(&a, RKind::Standard, sa)?.tensor(&rep_with_g(&b, RKind::Standard, sb)?)?;
    let (r1, r2) = (rep_with_g(&first, RKind::Standard, sa ^ sb)?, rep_with_g(&second, RKind::Standard, !(sa ^ sb))?);
    let d: Vec<SMatrix> = r1.images().iter().zip(r2.images()).map(|(x, y)| block_diag(x, y)).collect();
    let basis = intertwiners(&t, &d);
    let m = (1..=4i64)
        .map(|s| {
            basis.iter().enumerate().fold(SMatrix::zeros(4, 4), |acc, (k, b)| {
                acc.add(&b.scale(&Scalar::from_i64(s.pow(k as u32))))
            })
        })
        .find(|m| m.inverse().is_ok())
        .ok_or(QgwError::NoIntertwiner)?;
    let m_inv = m.inverse()?;
    let mut identities = IdentitySet::new(format!("{l1}⊗{l2} = {first} ⊕ {second}"));
    for (x, g) in t.hopf.pres.gens().iter().enumerate() {
        identities.push(format!("M⁻¹ {0} M = {0} ⊕ {0}", g.name), m_inv.mul(&t.images()[x]).mul(&m), d[x].clone());
    }
    Ok(Decomposition { first, second, intertwiner: m, identities })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(a: &str, b: &str) -> RepLabel {
        RepLabel::Sym(Scalar::named(a).unwrap(), Scalar::named(b).unwrap())
    }

    #[test]
    fn generic_law() {
        let d = tensor_decompose(&sym("la1", "la2"), &sym("mu1", "mu2")).unwrap();
        let [l1, l2, m1, m2] = ["la1", "la2", "mu1", "mu2"].map(|s| Scalar::named(s).unwrap());
        assert_eq!(d.first, RepLabel::Sym(&l1 * &m1, &l2 * &m2));
        assert_eq!(d.second, RepLabel::Sym(&(&l1 * &m1) * &Scalar::q_pow(-1), -(&(&l2 * &m2) * &Scalar::q())));
        let rep = d.identities.exact_report();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn canonical_square() {
        let d = tensor_decompose(&RepLabel::Int(1, 0), &RepLabel::Int(1, 0)).unwrap();
        let q = Scalar::q();
        assert_eq!(d.first, RepLabel::Sym(&q * &q, Scalar::one()));
        assert_eq!(d.second, RepLabel::Sym(q.clone(), -q));
        assert!(d.identities.exact_report().ok());
    }

    #[test]
    fn degenerate_target() {
        // λ1μ1λ2μ2 = 1 for the first summand.
        let q = Scalar::q();
        let a = RepLabel::Sym(q.clone(), Scalar::one());
        let b = RepLabel::Sym(Scalar::q_pow(-2), q);
        assert_eq!(tensor_decompose(&a, &b).unwrap_err(), QgwError::DegenerateLabel);
    }
}
