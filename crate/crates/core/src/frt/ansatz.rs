use super::OperatorMatrix;
use crate::catalog::lin;
use crate::error::Result;
use crate::ncalg::{Element, Pres};
use crate::scalars::Scalar;

type Cell<'a> = &'a [(Scalar, &'a [&'a str])];

fn build(label: &str, p: &Pres, cells: [Cell; 4]) -> Result<OperatorMatrix> {
    let entries = cells.iter().map(|c| lin(p, c)).collect::<Result<Vec<Element>>>()?;
    OperatorMatrix::new(label, p.clone(), 2, entries)
}

fn lam() -> Scalar {
    Scalar::q_minus_qinv()
}

/// `l⁺ = [[K1, 0], [λX⁺, K2⁻¹]]`, `l⁻ = [[K1⁻¹, −λX⁻], [0, K2]]` in the `K1, K2, g, X±` algebra.
pub fn l_standard(p: &Pres) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let one = Scalar::one();
    let plus = build("l+", p, [&[(one.clone(), &["K1"])], &[], &[(lam(), &["X+"])], &[(one.clone(), &["K2^-1"])]])?;
    let minus = build("l-", p, [&[(one.clone(), &["K1^-1"])], &[(-lam(), &["X-"])], &[], &[(one, &["K2"])]])?;
    Ok((plus, minus))
}

/// Operator matrices matching the twisted coproduct.
pub fn l_omega(p: &Pres) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let one = Scalar::one();
    let plus = build(
        "l+Ω",
        p,
        [&[(one.clone(), &["K1", "K2^-1", "g"])], &[], &[(lam(), &["K1", "X+"])], &[(one.clone(), &["K1", "K2^-1"])]],
    )?;
    let minus = build(
        "l-Ω",
        p,
        [
            &[(one.clone(), &["K1^-1", "K2^-1", "g"])],
            &[(-lam(), &["K2^-1", "g", "X-"])],
            &[],
            &[(one, &["K1", "K2"])],
        ],
    )?;
    Ok((plus, minus))
}

/// `m⁺ = [[QhQN⁻¹, 0], [λη, QN⁻¹]]`, `m⁻ = [[Qh⁻¹QN, −λη⁺], [0, QN]]` in `U_q gl(1|1)`.
pub fn m_standard(p: &Pres) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let one = Scalar::one();
    let plus =
        build("m+", p, [&[(one.clone(), &["Qh", "QN^-1"])], &[], &[(lam(), &["eta"])], &[(one.clone(), &["QN^-1"])]])?;
    let minus =
        build("m-", p, [&[(one.clone(), &["Qh^-1", "QN"])], &[(-lam(), &["eta+"])], &[], &[(one, &["QN"])]])?;
    Ok((plus, minus))
}

/// Super operator matrices matching the twisted super coproduct.
pub fn m_omega(p: &Pres) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let one = Scalar::one();
    let plus = build(
        "m+Ω",
        p,
        [
            &[(one.clone(), &["Qh", "QN^-1", "QN^-1"])],
            &[],
            &[(lam(), &["Qh", "QN^-1", "eta"])],
            &[(one.clone(), &["Qh", "QN^-1", "QN^-1"])],
        ],
    )?;
    let minus = build(
        "m-Ω",
        p,
        [&[(one.clone(), &["Qh^-1"])], &[(-lam(), &["QN^-1", "eta+"])], &[], &[(one, &["Qh"])]],
    )?;
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::super::frt_families_check;
    use super::*;
    use crate::catalog::{gl11_presentation, uq_presentation};
    use crate::rmatlab::catalog;

    #[test]
    fn standard_pair_satisfies_rll() {
        let p = uq_presentation().unwrap();
        let (lp, lm) = l_standard(&p).unwrap();
        let rep = frt_families_check(&catalog::alexander_conway().unwrap(), &lp, &lm).unwrap();
        assert_eq!(rep.checked, 48);
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn omega_pair_satisfies_rll() {
        let p = uq_presentation().unwrap();
        let (lp, lm) = l_omega(&p).unwrap();
        let rep = frt_families_check(&catalog::r_omega().unwrap(), &lp, &lm).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn super_pairs_satisfy_rll() {
        let p = gl11_presentation().unwrap();
        let (mp, mm) = m_standard(&p).unwrap();
        let rep = frt_families_check(&catalog::alexander_conway_super().unwrap(), &mp, &mm).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
        let (mp, mm) = m_omega(&p).unwrap();
        let rep = frt_families_check(&catalog::r_omega_super().unwrap(), &mp, &mm).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn wrong_matrix_is_rejected() {
        let p = uq_presentation().unwrap();
        let (lp, lm) = l_standard(&p).unwrap();
        let rep = frt_families_check(&catalog::r_omega().unwrap(), &lp, &lm).unwrap();
        assert!(!rep.ok());
        let (mp, mm) = m_standard(&gl11_presentation().unwrap()).unwrap();
        let rep = frt_families_check(&catalog::alexander_conway().unwrap(), &mp, &mm).unwrap();
        assert!(!rep.ok(), "super ansatz must need the graded signs");
    }
}
