use proptest::prelude::*;

use qgw_core::catalog::uq_presentation;
use qgw_core::exterior::omega_build;
use qgw_core::ncalg::{Element, Presentation};
use qgw_core::rmatlab::catalog::gl_standard;
use qgw_core::scalars::Scalar;

fn poly(coeffs: &[i64]) -> Scalar {
    let mut acc = Scalar::zero();
    for (k, c) in coeffs.iter().enumerate() {
        acc += &Scalar::q_pow(k as i32 - 1).scale_int(*c);
    }
    acc
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (prop::collection::vec(-3i64..=3, 1..4), prop::collection::vec(-3i64..=3, 1..3)).prop_filter_map(
        "nonzero denominator",
        |(n, d)| {
            let den = poly(&d);
            (!den.is_zero()).then(|| &poly(&n) / &den)
        },
    )
}

fn element(ngens: u8) -> impl Strategy<Value = Element> {
    prop::collection::vec((prop::collection::vec(0..ngens, 0..5), -2i64..=2), 1..4).prop_map(|terms| {
        let mut e = Element::zero();
        for (w, c) in terms {
            e.add_term(w, &Scalar::from_i64(c));
        }
        e
    })
}

fn reduces_stably(p: &Presentation, a: &Element, b: &Element) -> Result<(), TestCaseError> {
    let na = p.normal_form(a).unwrap();
    prop_assert_eq!(&p.normal_form(&na).unwrap(), &na);
    let nb = p.normal_form(b).unwrap();
    let mut ab = Element::zero();
    for (u, c) in a.terms() {
        for (v, d) in b.terms() {
            let mut w = u.clone();
            w.extend_from_slice(v);
            ab.add_term(w, &(c * d));
        }
    }
    prop_assert_eq!(p.normal_form(&ab).unwrap(), p.mul(&na, &nb).unwrap());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        prop_assert_eq!(Scalar::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn quantum_group_normal_form_is_stable(a in element(7), b in element(7)) {
        reduces_stably(&uq_presentation().unwrap(), &a, &b)?;
    }

    #[test]
    fn exterior_normal_form_is_stable(a in element(4), b in element(4)) {
        let o = omega_build(&gl_standard(2).unwrap()).unwrap();
        reduces_stably(&o.pres, &a, &b)?;
    }
}
