use std::sync::Arc;

use super::{all_words, free_mul, ExteriorAlgebra};
use crate::catalog::gl11_dictionary;
use crate::error::{QgwError, Result};
use crate::hopfcore::HopfData;
use crate::ncalg::Element;
use crate::par::par_map;
use crate::reps::RKind;
use crate::report::Report;
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActingAlgebra {
    /// `U_q^Ω` with group-likes `K1 = q^{H1/2}`, `K2 = e^{iπH2/2} q^{H2/2}`, `g = e^{iπH2/2}`.
    Bosonic,
    /// `U_q^Ω gl(1|1)` with group-likes `Qh = q^h`, `QN = q^N`.
    Super,
}

impl ActingAlgebra {
    fn kind(self) -> RKind {
        match self {
            ActingAlgebra::Bosonic => RKind::Omega,
            ActingAlgebra::Super => RKind::SuperOmega,
        }
    }
}

/// A generator of the acting algebra, or one of the primitive Cartan elements
/// acting as a derivation with fixed eigenvalues on `x_i` and `dx_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Actor {
    Gen(u8),
    Primitive(usize),
}

/// Right action of a twisted quantum group on the generators of `Ω_q(R)`.
#[derive(Clone, Debug)]
pub struct ActionTable {
    pub algebra: ActingAlgebra,
    pub hopf: Arc<HopfData>,
    n: usize,
    images: Vec<Vec<Element>>,
    primitives: Vec<(&'static str, [i64; 2])>,
}

type GenRow = (&'static str, [Scalar; 2], [Option<Scalar>; 2]);

impl ActionTable {
    /// `x◁X⁺ = q⁻¹dx`, `dx◁X⁻ = q x`, Cartan eigenvalues `H1 = (2, 0)`, `H2 = (0, 2)` on `(x, dx)`.
    pub fn bosonic(n: usize) -> Result<Self> {
        let q = Scalar::q;
        let qi = || Scalar::q_pow(-1);
        let one = Scalar::one;
        let m = |s: Scalar| -s;
        let rows: Vec<GenRow> = vec![
            ("K1", [q(), one()], [None, None]),
            ("K1^-1", [qi(), one()], [None, None]),
            ("K2", [one(), m(q())], [None, None]),
            ("K2^-1", [one(), m(qi())], [None, None]),
            ("g", [one(), m(one())], [None, None]),
            ("X+", [Scalar::zero(), Scalar::zero()], [Some(qi()), None]),
            ("X-", [Scalar::zero(), Scalar::zero()], [None, Some(q())]),
        ];
        Self::assemble(ActingAlgebra::Bosonic, n, &rows, vec![("H1", [2, 0]), ("H2", [0, 2])])
    }

    /// `x◁η = q⁻¹dx`, `dx◁η⁺ = q x`, Cartan eigenvalues `h = (1, 1)`, `N = (0, 1)` on `(x, dx)`.
    pub fn super_gl11(n: usize) -> Result<Self> {
        let q = Scalar::q;
        let qi = || Scalar::q_pow(-1);
        let one = Scalar::one;
        let rows: Vec<GenRow> = vec![
            ("Qh", [q(), q()], [None, None]),
            ("Qh^-1", [qi(), qi()], [None, None]),
            ("QN", [one(), q()], [None, None]),
            ("QN^-1", [one(), qi()], [None, None]),
            ("eta", [Scalar::zero(), Scalar::zero()], [Some(qi()), None]),
            ("eta+", [Scalar::zero(), Scalar::zero()], [None, Some(q())]),
        ];
        Self::assemble(ActingAlgebra::Super, n, &rows, vec![("h", [1, 1]), ("N", [0, 1])])
    }

    pub fn for_algebra(algebra: ActingAlgebra, n: usize) -> Result<Self> {
        match algebra {
            ActingAlgebra::Bosonic => Self::bosonic(n),
            ActingAlgebra::Super => Self::super_gl11(n),
        }
    }

    /// Each row gives the scalar on `x_i` and `dx_i`, plus the coefficient of
    /// `x_i ↦ dx_i` and `dx_i ↦ x_i`.
    fn assemble(
        algebra: ActingAlgebra,
        n: usize,
        rows: &[GenRow],
        primitives: Vec<(&'static str, [i64; 2])>,
    ) -> Result<Self> {
        let hopf = algebra.kind().hopf()?;
        let p = &hopf.pres;
        let mut images = vec![vec![Element::zero(); p.ngens()]; 2 * n];
        for (name, diag, shift) in rows {
            let h = p.idx(name)? as usize;
            for i in 0..n {
                let (x, dx) = (i as u8, (n + i) as u8);
                let mut ex = Element::word(vec![x], diag[0].clone());
                let mut edx = Element::word(vec![dx], diag[1].clone());
                if let Some(c) = &shift[0] {
                    ex.add_term(vec![dx], c);
                }
                if let Some(c) = &shift[1] {
                    edx.add_term(vec![x], c);
                }
                images[i][h] = ex;
                images[n + i][h] = edx;
            }
        }
        Ok(ActionTable { algebra, hopf, n, images, primitives })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn actor(&self, name: &str) -> Result<Actor> {
        if let Some(i) = self.hopf.pres.index(name) {
            return Ok(Actor::Gen(i));
        }
        self.primitives
            .iter()
            .position(|(p, _)| *p == name)
            .map(Actor::Primitive)
            .ok_or_else(|| QgwError::UnknownActor(name.to_string()))
    }

    pub fn actors(&self) -> Vec<(String, Actor)> {
        let gens = self.hopf.pres.gens().iter().enumerate().map(|(i, g)| (g.name.clone(), Actor::Gen(i as u8)));
        let prims = self.primitives.iter().enumerate().map(|(i, (p, _))| (p.to_string(), Actor::Primitive(i)));
        gens.chain(prims).collect()
    }

    /// Replaces one table entry, e.g. to probe that a wrong table is detected.
    pub fn with_entry(mut self, omega_gen: u8, actor: &str, image: Element) -> Result<Self> {
        let Actor::Gen(h) = self.actor(actor)? else {
            return Err(QgwError::UnknownActor(actor.to_string()));
        };
        let slot = self
            .images
            .get_mut(omega_gen as usize)
            .ok_or_else(|| QgwError::UnknownName(format!("generator {omega_gen}")))?;
        slot[h as usize] = image;
        Ok(self)
    }

    fn form_degree(&self, w: &[u8]) -> u8 {
        w.iter().filter(|&&g| g as usize >= self.n).count() as u8 & 1
    }

    /// `w◁h` on a free word through the (super-)covariance identity, without reduction.
    fn act_word(&self, w: &[u8], h: Actor) -> Element {
        match h {
            Actor::Primitive(k) => {
                let eig = self.primitives[k].1;
                let s: i64 = w.iter().map(|&g| eig[(g as usize >= self.n) as usize]).sum();
                Element::word(w.to_vec(), Scalar::from_i64(s))
            }
            Actor::Gen(h) => match w {
                [] => Element::scalar(self.hopf.eps_gen(h).clone()),
                [g] => self.images[*g as usize][h as usize].clone(),
                [x, rest @ ..] => {
                    let super_mode = self.algebra == ActingAlgebra::Super;
                    let rest_odd = self.form_degree(rest) == 1;
                    let mut out = Element::zero();
                    for (legs, c) in self.hopf.delta_gen(h).terms() {
                        let (h1, h2) = (&legs[0], &legs[1]);
                        let flip = super_mode && rest_odd && self.hopf.pres.word_degree(h1) == 1;
                        let left = self.act_by_word(&Element::letter(*x), h1);
                        let right = self.act_by_word(&Element::word(rest.to_vec(), Scalar::one()), h2);
                        out.add_scaled(&free_mul(&left, &right), &if flip { -c.clone() } else { c.clone() });
                    }
                    out
                }
            },
        }
    }

    /// `e◁(h_1 h_2 …) = (e◁h_1)◁h_2 …` on free words.
    fn act_by_word(&self, e: &Element, hw: &[u8]) -> Element {
        hw.iter().fold(e.clone(), |acc, &h| self.act_free(&acc, Actor::Gen(h)))
    }

    fn act_free(&self, e: &Element, h: Actor) -> Element {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            out.add_scaled(&self.act_word(w, h), c);
        }
        out
    }

    fn act_by_element(&self, e: &Element, a: &Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in a.terms() {
            out.add_scaled(&self.act_by_word(e, w), c);
        }
        out
    }

    /// Applies each word of `a` as a composition of operators, rightmost letter first.
    fn act_by_operator(&self, e: &Element, a: &Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in a.terms() {
            let rev: Vec<u8> = w.iter().rev().copied().collect();
            out.add_scaled(&self.act_by_word(e, &rev), c);
        }
        out
    }
}

/// `e◁h`, reduced to normal form in `omega`.
pub fn act(omega: &ExteriorAlgebra, e: &Element, h: &str, table: &ActionTable) -> Result<Element> {
    if table.n != omega.n {
        return Err(QgwError::Dimension(format!("table for n = {}, algebra with n = {}", table.n, omega.n)));
    }
    let actor = table.actor(h)?;
    omega.pres.normal_form(&table.act_free(e, actor))
}

/// Every defining relation is mapped into the ideal by every actor, and the
/// table respects the relations of the acting algebra on each generator.
pub fn covariance_check(table: &ActionTable, omega: &ExteriorAlgebra) -> Result<Report> {
    if table.n != omega.n {
        return Err(QgwError::Dimension(format!("table for n = {}, algebra with n = {}", table.n, omega.n)));
    }
    let actors = table.actors();
    let grid: Vec<(usize, usize)> =
        (0..omega.relations().len()).flat_map(|r| (0..actors.len()).map(move |a| (r, a))).collect();
    let results = par_map(&grid, |&(r, a)| -> Result<Option<String>> {
        let rel = &omega.relations()[r];
        let (name, actor) = &actors[a];
        let nf = omega.pres.normal_form(&table.act_free(&rel.element, *actor))?;
        Ok((!nf.is_zero()).then(|| format!("relation {} under {}: residual {}", rel.label(), name, omega.pres.show(&nf))))
    });
    let mut rep = Report::new(format!("{:?} action on {}", table.algebra, omega.pres.name));
    for r in results {
        match r? {
            Some(f) => rep.fail(f),
            None => rep.expect(true, String::new),
        }
    }
    let hp = &table.hopf.pres;
    for ((a, b), rhs) in hp.rule_list() {
        for v in 0..2 * omega.n as u8 {
            let e = Element::letter(v);
            let lhs = table.act_by_word(&e, &[a, b]);
            let diff = omega.pres.normal_form(&lhs.sub(&table.act_by_element(&e, rhs)))?;
            rep.expect(diff.is_zero(), || {
                format!(
                    "{} on {}: residual {}",
                    hp.word_string(&[a, b]),
                    omega.pres.word_string(&[v]),
                    omega.pres.show(&diff)
                )
            });
        }
    }
    Ok(rep)
}

/// The super action and the bosonic action through the generator dictionary
/// agree on all even words of length at most `max_len`. Dictionary images are
/// read as operator products, so `η⁺ ↦ X⁻g` applies `g` before `X⁻`.
pub fn action_agreement_check(omega: &ExteriorAlgebra, max_len: usize) -> Result<Report> {
    let bos = ActionTable::bosonic(omega.n)?;
    let sup = ActionTable::super_gl11(omega.n)?;
    let dict = gl11_dictionary(&sup.hopf.pres, &bos.hopf.pres)?;
    let words: Vec<_> = all_words(2 * omega.n, max_len)
        .into_iter()
        .filter(|w| sup.form_degree(w) == 0)
        .collect();
    let mut rep = Report::new(format!("super and bosonic actions agree on even elements of {}", omega.pres.name));
    for (i, g) in sup.hopf.pres.gens().iter().enumerate() {
        let image = dict.image(i as u8);
        let results = par_map(&words, |w| -> Result<Option<String>> {
            let e = Element::word(w.clone(), Scalar::one());
            let a = omega.pres.normal_form(&sup.act_free(&e, Actor::Gen(i as u8)))?;
            let b = omega.pres.normal_form(&bos.act_by_operator(&e, image))?;
            Ok((a != b).then(|| {
                format!(
                    "{}◁{}: {} vs {}",
                    omega.pres.word_string(w),
                    g.name,
                    omega.pres.show(&a),
                    omega.pres.show(&b)
                )
            }))
        });
        for r in results {
            match r? {
                Some(f) => rep.fail(f),
                None => rep.expect(true, String::new),
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::omega_build;
    use crate::rmatlab::catalog::{alexander_conway, gl_standard};

    fn plane() -> ExteriorAlgebra {
        omega_build(&gl_standard(2).unwrap()).unwrap()
    }

    #[test]
    fn generator_values() {
        let o = plane();
        let t = ActionTable::bosonic(2).unwrap();
        let x1 = o.pres.w(&["x1"]).unwrap();
        let dx1 = o.pres.w(&["dx1"]).unwrap();
        assert_eq!(act(&o, &x1, "X+", &t).unwrap(), dx1.scale(&Scalar::q_pow(-1)));
        assert!(act(&o, &x1, "X-", &t).unwrap().is_zero());
        assert_eq!(act(&o, &dx1, "X-", &t).unwrap(), x1.scale(&Scalar::q()));
        let x1x2 = o.pres.w(&["x1", "x2"]).unwrap();
        assert_eq!(act(&o, &x1x2, "H1", &t).unwrap(), x1x2.scale(&Scalar::from_i64(4)));
        assert!(act(&o, &x1x2, "H2", &t).unwrap().is_zero());
        assert_eq!(act(&o, &x1, "Z", &t).unwrap_err(), QgwError::UnknownActor("Z".into()));
    }

    #[test]
    fn form_degree_shifts_by_one() {
        let o = plane();
        let t = ActionTable::bosonic(2).unwrap();
        let e = o.pres.w(&["x1", "x2", "dx1"]).unwrap();
        let up = act(&o, &e, "X+", &t).unwrap();
        assert!(!up.is_zero());
        assert!(up.terms().all(|(w, _)| w.len() == 3 && t.form_degree(w) == 0 && w.iter().filter(|&&g| g >= 2).count() == 2));
    }

    #[test]
    fn covariant_on_hecke_planes() {
        for r in [gl_standard(2).unwrap(), alexander_conway().unwrap()] {
            let o = omega_build(&r).unwrap();
            for alg in [ActingAlgebra::Bosonic, ActingAlgebra::Super] {
                let rep = covariance_check(&ActionTable::for_algebra(alg, 2).unwrap(), &o).unwrap();
                assert!(rep.ok(), "{} {:?}: {:?}", r.name, alg, rep.failures);
            }
        }
    }

    #[test]
    fn corrupted_table_is_detected() {
        let o = plane();
        let dx1 = o.pres.w(&["dx1"]).unwrap();
        let t = ActionTable::bosonic(2).unwrap().with_entry(o.x(0), "X+", dx1).unwrap();
        let rep = covariance_check(&t, &o).unwrap();
        assert!(rep.failures.iter().any(|f| f.starts_with("relation dx2x1 under X+")), "{:?}", rep.failures);
        // Only the coordinate x1 was altered, so x2's relations with itself still hold.
        assert!(!rep.failures.iter().any(|f| f.starts_with("relation x2x2")));
    }

    #[test]
    fn dictionary_order_matters_on_odd_elements() {
        let o = plane();
        let bos = ActionTable::bosonic(2).unwrap();
        let sup = ActionTable::super_gl11(2).unwrap();
        let dx1 = o.pres.w(&["dx1"]).unwrap();
        let s = act(&o, &dx1, "eta+", &sup).unwrap();
        let xg = bos.hopf.pres.w(&["X-", "g"]).unwrap();
        let literal = o.pres.normal_form(&bos.act_by_element(&dx1, &xg)).unwrap();
        let operator = o.pres.normal_form(&bos.act_by_operator(&dx1, &xg)).unwrap();
        assert_eq!(s, literal);
        assert_eq!(s, operator.neg());
    }

    #[test]
    fn actions_agree_on_even_elements() {
        let rep = action_agreement_check(&plane(), 4).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }
}
