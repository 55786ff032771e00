//! Finitely presented ℤ2-graded algebras and their normal forms.
//!
//! Rules rewrite two-letter words. The term order compares weighted degree,
//! then length, then words lexicographically by generator index.

mod compile;
mod element;
mod io;
mod overlap;
mod presentation;

pub use compile::{compile_relations, CompileOptions};
pub use element::{Element, Word};
pub use io::{element_from_file, element_to_file, GeneratorFile, PresentationFile, RuleFile, TermFile};
pub use overlap::{overlap_check, OverlapReport};
pub use presentation::{Generator, Pres, Presentation, Skeleton, DEFAULT_STEP_CAP};

use crate::error::{QgwError, Result};
use crate::scalars::Scalar;

/// Graded tensor product algebra `A ⊗ B` as one presentation: generators of
/// `A` first, cross rules `y u → ± u y` for `y` in `B`, `u` in `A`, with the
/// Koszul sign when `signed`.
pub fn tensor_presentation(a: &Presentation, b: &Presentation, signed: bool) -> Result<Presentation> {
    let mut sk = a.to_skeleton();
    sk.name = format!("{}⊗{}", a.name, b.name);
    let off = a.ngens() as u8;
    for g in b.gens() {
        if a.index(&g.name).is_some() {
            return Err(QgwError::Format(format!("generator name {} occurs in both factors", g.name)));
        }
        let i = sk.gen(&g.name, g.degree);
        sk.gens[i as usize].nilpotent = g.nilpotent;
        sk.gens[i as usize].inverse = g.inverse.map(|j| j + off);
        sk.gens[i as usize].weight = g.weight;
    }
    for ((x, y), rhs) in b.to_skeleton().rules {
        sk.rule(x + off, y + off, rhs.map_words(|w| w.iter().map(|g| g + off).collect()));
    }
    for (yi, y) in b.gens().iter().enumerate() {
        for (ui, u) in a.gens().iter().enumerate() {
            let sign = if signed && y.degree == 1 && u.degree == 1 { -1 } else { 1 };
            sk.rule(yi as u8 + off, ui as u8, Element::word(vec![ui as u8, yi as u8 + off], Scalar::from_i64(sign)));
        }
    }
    Presentation::from_skeleton(sk, a.step_cap().max(b.step_cap()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane() -> Presentation {
        let mut sk = Skeleton::new("plane");
        let x = sk.gen("x", 0);
        let y = sk.gen("y", 0);
        sk.rule(y, x, Element::word(vec![x, y], Scalar::q()));
        sk.build().unwrap()
    }

    #[test]
    fn free_algebra_has_no_rules() {
        let mut sk = Skeleton::new("free");
        sk.gen("t", 0);
        let p = compile_relations(sk, &[], CompileOptions::default()).unwrap();
        assert!(p.rule_list().is_empty());
        let w = p.w(&["t", "t", "t"]).unwrap();
        assert_eq!(p.normal_form(&w).unwrap(), w);
        assert!(overlap_check(&p, 20, 1).unwrap().ok());
    }

    #[test]
    fn quantum_plane_reorders() {
        let p = plane();
        let yx = p.w(&["y", "y", "x"]).unwrap();
        let nf = p.normal_form(&yx).unwrap();
        assert_eq!(nf, p.w(&["x", "y", "y"]).unwrap().scale(&Scalar::q_pow(2)));
        assert_eq!(p.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn compile_orients_largest_word() {
        let mut sk = Skeleton::new("plane");
        sk.gen("x", 0);
        sk.gen("y", 0);
        let rel = Element::from_terms([(vec![0, 1], Scalar::q()), (vec![1, 0], Scalar::from_i64(-1))]);
        let p = compile_relations(sk, &[rel], CompileOptions::default()).unwrap();
        assert_eq!(p.rule(1, 0).unwrap(), &Element::word(vec![0, 1], Scalar::q()));
    }

    #[test]
    fn non_decreasing_rule_rejected() {
        let mut sk = Skeleton::new("bad");
        let x = sk.gen("x", 0);
        let y = sk.gen("y", 0);
        sk.rule(x, y, Element::word(vec![y, x], Scalar::one()));
        assert!(matches!(sk.build(), Err(QgwError::NonTerminatingOrder(_))));
    }

    #[test]
    fn step_cap_is_enforced() {
        let mut sk = Skeleton::new("loop");
        let a = sk.gen("a", 0);
        let b = sk.gen("b", 0);
        sk.weight(a, -1);
        sk.rule(a, b, Element::word(vec![a, a, b], Scalar::one()));
        let p = Presentation::from_skeleton(sk, 1000).unwrap();
        assert_eq!(p.word_nf(&[a, b]), Err(QgwError::StepCapExceeded(1000)));
    }

    #[test]
    fn inconsistent_relations_not_solvable() {
        let mut sk = Skeleton::new("bad");
        sk.gen("x", 0);
        let rel = Element::word(vec![0, 0, 0], Scalar::one());
        assert!(matches!(
            compile_relations(sk, &[rel], CompileOptions::default()),
            Err(QgwError::NotSolvable(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let p = plane();
        let back = Presentation::from_json(&p.to_json()).unwrap();
        assert_eq!(back.to_file(), p.to_file());
    }

    #[test]
    fn super_tensor_signs() {
        let mut sa = Skeleton::new("A");
        let e = sa.gen("e", 1);
        sa.nilpotent(e);
        let a = sa.build().unwrap();
        let mut sb = Skeleton::new("B");
        let f = sb.gen("f", 1);
        sb.nilpotent(f);
        let b = sb.build().unwrap();
        let t = tensor_presentation(&a, &b, true).unwrap();
        let fe = t.w(&["f", "e"]).unwrap();
        assert_eq!(t.normal_form(&fe).unwrap(), t.w(&["e", "f"]).unwrap().neg());
        let unsigned = tensor_presentation(&a, &b, false).unwrap();
        assert_eq!(unsigned.normal_form(&fe).unwrap(), unsigned.w(&["e", "f"]).unwrap());
    }
}
