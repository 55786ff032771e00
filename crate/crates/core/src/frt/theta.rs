use super::quantum_matrix::{a_r_presentation, generator_names};
use crate::catalog::lin;
use crate::error::{QgwError, Result};
use crate::gtensor::{Mode, TensorElement};
use crate::hopfcore::{hopf_map_check, superize, z2_extend, AlgebraMap, HopfData};
use crate::ncalg::{Element, Pres};
use crate::report::Report;
use crate::rmatlab::RMatrix;
use crate::scalars::Scalar;

/// Matrix coproduct `Δt = t⊗t` and counit `ε(t) = 1` on an `n×n` quantum matrix algebra.
pub fn matrix_bialgebra(p: &Pres, n: usize, mode: Mode) -> Result<HopfData> {
    let names = generator_names(n);
    let mut maps = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut d = TensorElement::zero(2, mode);
            for k in 0..n {
                d.add_scaled(&TensorElement::pure(&[&p.g(&names[i][k])?, &p.g(&names[k][j])?], mode), &Scalar::one());
            }
            let eps = if i == j { Scalar::one() } else { Scalar::zero() };
            maps.push((names[i][j].as_str(), d, eps, None::<Element>));
        }
    }
    HopfData::from_named(&format!("bialgebra {}", p.name), p.clone(), mode, &maps, None)
}

/// Superizes `A(R)⋊ℤ2` for the grading `p` and compares it with `A(R̲)⋊ℤ2`
/// through `θ(t^i_j) = u^i_j g^{p(j)}`, `θ(g) = g`.
pub fn theta_iso_check(r: &RMatrix, p: &[u8]) -> Result<Report> {
    let n = r.dim();
    if p.len() != n {
        return Err(QgwError::Dimension("grading length must equal n".into()));
    }
    let bosonic = RMatrix::new(&r.name, n, r.matrix().clone(), p.to_vec(), false)?;
    let rbar = bosonic.superize(p)?;
    let parity: Vec<u8> = (0..n * n).map(|k| (p[k / n] + p[k % n]) & 1).collect();
    let a = matrix_bialgebra(&a_r_presentation(&bosonic)?, n, Mode::Bosonic)?;
    let src = superize(&z2_extend(&a, &parity)?)?;
    let b = matrix_bialgebra(&a_r_presentation(&rbar)?, n, Mode::Super)?;
    let dst = z2_extend(&b, &parity)?;
    let names = generator_names(n);
    let mut images = Vec::with_capacity(n * n + 1);
    for row in &names {
        for (j, name) in row.iter().enumerate() {
            let word: Vec<&str> = if p[j] == 1 { vec![name, "g"] } else { vec![name] };
            images.push((name.as_str(), lin(&dst.pres, &[(Scalar::one(), &word)])?));
        }
    }
    images.push(("g", dst.pres.g("g")?));
    let theta = AlgebraMap::from_named(src.pres.clone(), dst.pres.clone(), &images)?;
    let mut rep = Report::new(format!("θ for {} with grading {p:?}", r.name));
    rep.absorb(hopf_map_check(&src, &dst, &theta)?);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatlab::catalog;

    #[test]
    fn ac_theta() {
        let rep = theta_iso_check(&catalog::alexander_conway().unwrap(), &[0, 1]).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn omega_theta() {
        let rep = theta_iso_check(&catalog::r_omega().unwrap(), &[0, 1]).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn trivial_grading_is_identity() {
        let rep = theta_iso_check(&catalog::gl_standard(2).unwrap(), &[0, 0]).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn gl21_theta() {
        let rep = theta_iso_check(&catalog::gl_nm(2, 1).unwrap(), &[0, 0, 1]).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }
}
