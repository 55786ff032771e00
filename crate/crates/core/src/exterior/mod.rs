//! Quantum exterior algebras of Hecke type with their differential and the
//! covariant right actions of the twisted quantum groups.

mod action;
mod coaction;

pub use action::{act, action_agreement_check, covariance_check, ActingAlgebra, ActionTable, Actor};
pub use coaction::{gl_coaction_check, primed_relations};

use crate::error::{QgwError, Result};
use crate::ncalg::{compile_relations, CompileOptions, Element, Pres, Skeleton, Word};
use crate::par::par_map;
use crate::report::Report;
use crate::rmatlab::RMatrix;
use crate::scalars::Scalar;

/// The three families of quadratic relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    XX,
    DxX,
    DxDx,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::XX, Family::DxX, Family::DxDx];

    fn prefix(self) -> (&'static str, &'static str) {
        match self {
            Family::XX => ("x", "x"),
            Family::DxX => ("dx", "x"),
            Family::DxDx => ("dx", "dx"),
        }
    }
}

/// A defining relation `L − R = 0`, kept unreduced.
#[derive(Clone, Debug)]
pub struct Relation {
    pub family: Family,
    pub i: usize,
    pub j: usize,
    pub element: Element,
}

impl Relation {
    pub fn label(&self) -> String {
        let (a, b) = self.family.prefix();
        format!("{a}{}{b}{}", self.i + 1, self.j + 1)
    }
}

/// `Ω_q(R)` on `x_1 … x_n` (even) and `dx_1 … dx_n` (odd).
#[derive(Clone, Debug)]
pub struct ExteriorAlgebra {
    pub n: usize,
    pub r: RMatrix,
    pub pres: Pres,
    relations: Vec<Relation>,
}

/// Words over `letters` of every length up to `max_len`, including the empty word.
pub(crate) fn all_words(letters: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..letters as u8).map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Concatenation product in the free algebra.
pub(crate) fn free_mul(a: &Element, b: &Element) -> Element {
    let mut out = Element::zero();
    for (u, c) in a.terms() {
        for (v, d) in b.terms() {
            let mut w = u.clone();
            w.extend_from_slice(v);
            out.add_term(w, &(c * d));
        }
    }
    out
}

fn relations_of(r: &RMatrix) -> Vec<Relation> {
    let n = r.dim();
    let letter = |form: bool, i: usize| (if form { n + i } else { i }) as u8;
    let mut out = Vec::new();
    for family in Family::ALL {
        // `u_i v_j = c · v'_b u'_a R^a_i^b_j` with form flags for u, v, v', u'.
        let (flags, c) = match family {
            Family::XX => ([false, false, false, false], Scalar::q_pow(-1)),
            Family::DxX => ([true, false, false, true], Scalar::q()),
            Family::DxDx => ([true, true, true, true], -Scalar::q()),
        };
        for i in 0..n {
            for j in 0..n {
                let mut e = Element::word(vec![letter(flags[0], i), letter(flags[1], j)], Scalar::one());
                for a in 0..n {
                    for b in 0..n {
                        let v = r.get(a, i, b, j);
                        if !v.is_zero() {
                            e.add_term(vec![letter(flags[2], b), letter(flags[3], a)], &-(v * &c));
                        }
                    }
                }
                if !e.is_zero() {
                    out.push(Relation { family, i, j, element: e });
                }
            }
        }
    }
    out
}

/// Builds `Ω_q(R)` from a Hecke R-matrix and certifies that `d` is well defined on it.
pub fn omega_build(r: &RMatrix) -> Result<ExteriorAlgebra> {
    if !r.hecke_check().ok() {
        return Err(QgwError::NotHecke);
    }
    let n = r.dim();
    let mut sk = Skeleton::new(&format!("Ω_q({})", r.name));
    for i in 0..n {
        sk.gen(&format!("x{}", i + 1), 0);
    }
    for i in 0..n {
        sk.gen(&format!("dx{}", i + 1), 1);
    }
    let relations = relations_of(r);
    let elements: Vec<Element> = relations.iter().map(|rel| rel.element.clone()).collect();
    let pres = compile_relations(sk, &elements, CompileOptions::default())?.into_pres();
    let omega = ExteriorAlgebra { n, r: r.clone(), pres, relations };
    let leibniz = omega.leibniz_check()?;
    if !leibniz.ok() {
        return Err(QgwError::NotSolvable(format!("d does not preserve the relations: {}", leibniz.failures.join("; "))));
    }
    Ok(omega)
}

impl ExteriorAlgebra {
    pub fn x(&self, i: usize) -> u8 {
        i as u8
    }

    pub fn dx(&self, i: usize) -> u8 {
        (self.n + i) as u8
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// `d` on free words by the graded Leibniz rule, without reduction.
    pub fn d_free(&self, e: &Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            let mut odd = false;
            for (k, &g) in w.iter().enumerate() {
                if (g as usize) < self.n {
                    let mut v = w.clone();
                    v[k] = g + self.n as u8;
                    out.add_term(v, &if odd { -c.clone() } else { c.clone() });
                } else {
                    odd = !odd;
                }
            }
        }
        out
    }

    pub fn differential(&self, e: &Element) -> Result<Element> {
        self.pres.normal_form(&self.d_free(e))
    }

    /// `d` sends every defining relation and every rewrite rule into the ideal.
    pub fn leibniz_check(&self) -> Result<Report> {
        let mut rep = Report::new(format!("d respects the relations of {}", self.pres.name));
        for rel in &self.relations {
            let nf = self.differential(&rel.element)?;
            rep.expect(nf.is_zero(), || format!("d({}) = {}", rel.label(), self.pres.show(&nf)));
        }
        for ((a, b), rhs) in self.pres.rule_list() {
            let e = Element::word(vec![a, b], Scalar::one()).sub(rhs);
            let nf = self.differential(&e)?;
            rep.expect(nf.is_zero(), || format!("d({}) = {}", self.pres.word_string(&[a, b]), self.pres.show(&nf)));
        }
        Ok(rep)
    }

    /// `d² = 0` on every word of length at most `max_len`.
    pub fn d_squared_check(&self, max_len: usize) -> Result<Report> {
        let words = all_words(2 * self.n, max_len);
        let results = par_map(&words, |w| -> Result<Option<String>> {
            let e = Element::word(w.clone(), Scalar::one());
            let dd = self.differential(&self.differential(&e)?)?;
            Ok((!dd.is_zero()).then(|| format!("d²({}) = {}", self.pres.word_string(w), self.pres.show(&dd))))
        });
        let mut rep = Report::new(format!("d² = 0 on {}", self.pres.name));
        for r in results {
            match r? {
                Some(f) => rep.fail(f),
                None => rep.expect(true, String::new),
            }
        }
        Ok(rep)
    }

    /// Rewrite rules never mix the x-subalgebra and the dx-subalgebra.
    pub fn subalgebra_closure_check(&self) -> Report {
        let mut rep = Report::new(format!("x and dx subalgebras of {} are closed", self.pres.name));
        let n = self.n as u8;
        for ((a, b), rhs) in self.pres.rule_list() {
            for pure in [|g: u8, n: u8| g < n, |g: u8, n: u8| g >= n] {
                if pure(a, n) && pure(b, n) {
                    let closed = rhs.terms().all(|(w, _)| w.iter().all(|&g| pure(g, n)));
                    rep.expect(closed, || format!("{} → {}", self.pres.word_string(&[a, b]), self.pres.show(rhs)));
                }
            }
        }
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatlab::catalog::{alexander_conway, gl_standard, identity, one_dim};

    fn el(o: &ExteriorAlgebra, names: &[&str]) -> Element {
        o.pres.w(names).unwrap()
    }

    #[test]
    fn standard_plane_rules() {
        let o = omega_build(&gl_standard(2).unwrap()).unwrap();
        let p = &o.pres;
        let nf = |names: &[&str]| p.normal_form(&el(&o, names)).unwrap();
        // One of x1x2, x2x1 is a q-multiple of the other and the dx squares vanish.
        let (x12, x21) = (el(&o, &["x1", "x2"]), nf(&["x2", "x1"]));
        let ratio = if x21 == x12.scale(&Scalar::q()) || x21 == x12.scale(&Scalar::q_pow(-1)) { Some(()) } else { None };
        assert!(ratio.is_some(), "x2x1 → {}", p.show(&x21));
        for i in ["dx1", "dx2"] {
            assert!(nf(&[i, i]).is_zero());
        }
        assert!(o.subalgebra_closure_check().ok());
        // Normal words put coordinates before forms.
        let mixed = nf(&["dx1", "x2"]);
        assert!(mixed.terms().all(|(w, _)| (w[0] as usize) < o.n));
    }

    #[test]
    fn one_dimensional_case() {
        let o = omega_build(&one_dim().unwrap()).unwrap();
        assert!(o.relations().iter().all(|r| r.family != Family::XX));
        let p = &o.pres;
        assert!(p.normal_form(&el(&o, &["dx1", "dx1"])).unwrap().is_zero());
        assert_eq!(p.normal_form(&el(&o, &["x1", "x1"])).unwrap(), el(&o, &["x1", "x1"]));
    }

    #[test]
    fn alexander_conway_plane() {
        let o = omega_build(&alexander_conway().unwrap()).unwrap();
        assert!(o.subalgebra_closure_check().ok());
        let dd = o.relations().iter().find(|r| r.family == Family::DxDx && r.i == 0 && r.j == 0).unwrap();
        // R^1_1^1_1 = q gives (1 + q²) dx1² = 0.
        assert_eq!(dd.element.coeff(&[o.dx(0), o.dx(0)]), &Scalar::one() + &Scalar::q_pow(2));
        assert!(o.pres.normal_form(&el(&o, &["dx1", "dx1"])).unwrap().is_zero());
    }

    #[test]
    fn non_hecke_input_is_rejected() {
        assert_eq!(omega_build(&identity(2).unwrap()).unwrap_err(), QgwError::NotHecke);
    }

    #[test]
    fn differential_basics() {
        let o = omega_build(&gl_standard(2).unwrap()).unwrap();
        assert_eq!(o.differential(&el(&o, &["x1"])).unwrap(), el(&o, &["dx1"]));
        assert!(o.differential(&el(&o, &["dx2"])).unwrap().is_zero());
        let dxx = o.differential(&el(&o, &["x1", "x2"])).unwrap();
        assert!(o.differential(&dxx).unwrap().is_zero());
        // d of an x-relation lands on the corresponding dx-x relation.
        for rel in o.relations().iter().filter(|r| r.family == Family::XX) {
            let d = o.d_free(&rel.element);
            assert!(!d.is_zero());
            assert!(o.pres.normal_form(&d).unwrap().is_zero());
        }
    }

    #[test]
    fn d_squared_vanishes() {
        for r in [gl_standard(2).unwrap(), alexander_conway().unwrap(), gl_standard(3).unwrap()] {
            let o = omega_build(&r).unwrap();
            let rep = o.d_squared_check(4).unwrap();
            assert!(rep.ok(), "{:?}", rep.failures);
            assert!(o.leibniz_check().unwrap().ok());
        }
    }
}
