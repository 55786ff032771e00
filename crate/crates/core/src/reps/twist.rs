use super::universal::{flip_matrix, r_on, RKind};
use super::{diag_by, eval_tensor, q_quarter, rep_for, IdentitySet, Rep, RepLabel};
use crate::error::Result;
use crate::linalg::SMatrix;
use crate::report::Report;

/// `χ = q^{H2⊗(H1+H2)/4}` on `a⊗b`; in the super form `q^{N⊗h}` is the same operator.
pub fn chi_on(a: &Rep, b: &Rep) -> Result<SMatrix> {
    let (wa, wb) = (a.weights()?, b.weights()?);
    let db = b.dim();
    diag_by(a.dim() * db, |ij| {
        let (i, j) = (ij / db, ij % db);
        q_quarter(wa.h2[i] * (wb.h1[j] + wb.h2[j]))
    })
}

fn identities_for(labels: [&RepLabel; 3], plain: RKind, twisted: RKind) -> Result<IdentitySet> {
    let [a, b, c] = [0, 1, 2].map(|i| rep_for(labels[i], plain));
    let (a, b, c) = (a?, b?, c?);
    let mut set = IdentitySet::new(format!("{plain} → {twisted}"));
    let (ab, bc) = (a.tensor(&b)?, b.tensor(&c)?);
    set.push(
        "(1⊗χ)(id⊗Δ)χ = (χ⊗1)(Δ⊗id)χ",
        SMatrix::identity(a.dim()).kron(&chi_on(&b, &c)?).mul(&chi_on(&a, &bc)?),
        chi_on(&a, &b)?.kron(&SMatrix::identity(c.dim())).mul(&chi_on(&ab, &c)?),
    );
    let triv = Rep::trivial(a.hopf.clone())?;
    set.push("(ε⊗id)χ = 1", chi_on(&triv, &b)?, SMatrix::identity(b.dim()));
    set.push("(id⊗ε)χ = 1", chi_on(&a, &triv)?, SMatrix::identity(a.dim()));

    let tw = twisted.hopf()?;
    let chi = chi_on(&a, &b)?;
    let chi_inv = chi.inverse()?;
    let (a_t, b_t) = (a.with_hopf(tw.clone())?, b.with_hopf(tw.clone())?);
    for (x, g) in tw.pres.gens().iter().enumerate() {
        let lhs = eval_tensor(tw.delta_gen(x as u8), &[&a_t, &b_t]);
        let rhs = chi.mul(&eval_tensor(a.hopf.delta_gen(x as u8), &[&a, &b])).mul(&chi_inv);
        set.push(format!("Δ_Ω({0}) = χΔ({0})χ⁻¹", g.name), lhs, rhs);
    }
    let chi21 = flip_matrix(&b, &a).mul(&chi_on(&b, &a)?).mul(&flip_matrix(&a, &b));
    set.push("ℛ_Ω = χ21ℛχ⁻¹", r_on(twisted, &a_t, &b_t)?, chi21.mul(&r_on(plain, &a, &b)?).mul(&chi_inv));
    Ok(set)
}

/// Cocycle identities, twisted coproducts and twisted R-matrices for both the
/// bosonic and the super structures on `l1⊗l2⊗l3`.
pub fn twist_identities(l1: &RepLabel, l2: &RepLabel, l3: &RepLabel) -> Result<IdentitySet> {
    for l in [l1, l2, l3] {
        l.ints()?;
    }
    let mut set = IdentitySet::new(format!("twisting on {l1}⊗{l2}⊗{l3}"));
    set.extend(identities_for([l1, l2, l3], RKind::Standard, RKind::Omega)?);
    set.extend(identities_for([l1, l2, l3], RKind::Super, RKind::SuperOmega)?);
    Ok(set)
}

pub fn twist_check(l1: &RepLabel, l2: &RepLabel, l3: &RepLabel) -> Result<Report> {
    Ok(twist_identities(l1, l2, l3)?.exact_report())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::QgwError;
    use crate::scalars::Scalar;

    #[test]
    fn canonical_triple() {
        let l = RepLabel::Int(1, 0);
        let rep = twist_check(&l, &l, &l).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn mixed_triple() {
        let rep = twist_check(&RepLabel::Int(1, 0), &RepLabel::Int(2, 1), &RepLabel::Int(1, 1)).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn zero_h2_on_the_left_is_trivial() {
        // Only H2 enters on the left leg; with m2 = 0 it vanishes on the first basis vector.
        let a = rep_for(&RepLabel::Int(1, 0), RKind::Standard).unwrap();
        let b = rep_for(&RepLabel::Int(2, 1), RKind::Standard).unwrap();
        let chi = chi_on(&a, &b).unwrap();
        for j in 0..2 {
            assert!(chi.get(j, j).is_one());
        }
        assert!(!chi.get(2, 2).is_one());
        let h = RKind::Standard.hopf().unwrap();
        let t = Rep::trivial(h).unwrap();
        assert_eq!(chi_on(&t, &b).unwrap(), SMatrix::identity(2));
    }

    #[test]
    fn symbolic_label_is_rejected() {
        let s = RepLabel::Sym(Scalar::named("la1").unwrap(), Scalar::named("la2").unwrap());
        let l = RepLabel::Int(1, 0);
        assert_eq!(twist_check(&s, &l, &l).unwrap_err(), QgwError::NonIntegerLabel);
    }
}
