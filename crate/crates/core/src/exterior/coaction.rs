use super::ExteriorAlgebra;
use crate::error::Result;
use crate::frt::a_r_presentation;
use crate::ncalg::{tensor_presentation, Element, Presentation};
use crate::report::Report;
use crate::rmatlab::catalog::r_omega_super;
use crate::scalars::Scalar;

/// Defining relations of `omega` with `x_i ↦ αx_i + βdx_i`, `dx_i ↦ γx_i + δdx_i`,
/// as elements of the super tensor algebra `A(R̲_Ω) ⊗ Ω_q(R)`.
pub fn primed_relations(omega: &ExteriorAlgebra) -> Result<(Presentation, Vec<(String, Element)>)> {
    let gl = a_r_presentation(&r_omega_super()?)?;
    let t = tensor_presentation(&gl, &omega.pres, true)?;
    let off = gl.ngens() as u8;
    let n = omega.n;
    let [a, b, c, d] = ["a", "b", "c", "d"].map(|s| t.idx(s));
    let (a, b, c, d) = (a?, b?, c?, d?);
    let primed: Vec<Element> = (0..2 * n)
        .map(|g| {
            let i = g % n;
            let (x, dx) = (omega.x(i) + off, omega.dx(i) + off);
            let (u, v) = if g < n { (a, b) } else { (c, d) };
            Element::from_terms([(vec![u, x], Scalar::one()), (vec![v, dx], Scalar::one())])
        })
        .collect();
    let mut out = Vec::new();
    for rel in omega.relations() {
        let mut e = Element::zero();
        for (w, coef) in rel.element.terms() {
            let factors: Vec<&Element> = w.iter().map(|&g| &primed[g as usize]).collect();
            e.add_scaled(&t.mul_all(&factors)?, coef);
        }
        out.push((rel.label(), e));
    }
    Ok((t, out))
}

/// The primed generators satisfy the relations of `omega` in `GL_q^Ω(1|1) ⊗ Ω_q(R)`.
pub fn gl_coaction_check(omega: &ExteriorAlgebra) -> Result<Report> {
    let (t, rels) = primed_relations(omega)?;
    let mut rep = Report::new(format!("GL_q^Ω(1|1) coaction on {}", omega.pres.name));
    for (label, e) in rels {
        rep.expect(e.is_zero(), || format!("primed {label}: residual {}", t.show(&e)));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::omega_build;
    use crate::rmatlab::catalog::{alexander_conway, gl_standard, one_dim};

    #[test]
    fn coaction_on_catalog_inputs() {
        for r in [gl_standard(2).unwrap(), alexander_conway().unwrap(), one_dim().unwrap()] {
            let o = omega_build(&r).unwrap();
            let rep = gl_coaction_check(&o).unwrap();
            assert!(rep.ok(), "{}: {:?}", r.name, rep.failures);
            assert_eq!(rep.checked, o.relations().len());
        }
    }

    #[test]
    fn super_matrix_relations() {
        let gl = a_r_presentation(&r_omega_super().unwrap()).unwrap();
        let nf = |names: &[&str]| gl.normal_form(&gl.w(names).unwrap()).unwrap();
        assert!(nf(&["b", "b"]).is_zero());
        assert!(nf(&["c", "c"]).is_zero());
        assert_eq!(nf(&["b", "a"]), nf(&["a", "b"]));
        assert_eq!(nf(&["c", "a"]), nf(&["a", "c"]).scale(&Scalar::q_pow(2)));
        assert_eq!(nf(&["c", "b"]), nf(&["b", "c"]).scale(&-Scalar::q_pow(2)));
    }
}
