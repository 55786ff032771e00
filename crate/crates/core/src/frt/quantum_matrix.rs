use super::OperatorMatrix;
use crate::error::{QgwError, Result};
use crate::gtensor::{Mode, TensorElement, TensorSquare};
use crate::hopfcore::HopfData;
use crate::ncalg::{compile_relations, overlap_check, CompileOptions, Element, Pres, Presentation, Skeleton};
use crate::report::Report;
use crate::rmatlab::RMatrix;
use crate::scalars::Scalar;

/// `a, b, c, d` for `2×2`, otherwise `t11 … tnn`.
pub fn generator_names(n: usize) -> Vec<Vec<String>> {
    if n == 2 {
        return vec![vec!["a".into(), "b".into()], vec!["c".into(), "d".into()]];
    }
    (0..n).map(|i| (0..n).map(|j| format!("t{}{}", i + 1, j + 1)).collect()).collect()
}

fn sgn(bits: u8) -> Scalar {
    if bits & 1 == 1 {
        Scalar::from_i64(-1)
    } else {
        Scalar::one()
    }
}

/// Relations of the quantum matrix algebra on generators `t_ij = letter(n·i + j)`,
/// graded by `p(i) + p(j)` when `R` is super:
///
/// `(-1)^{p(a)p(b)+p(c)p(e)} R^a_f^b_e t_fc t_ed = (-1)^{p(c)p(d)+p(r)p(a)} t_br t_as R^s_c^r_d`.
pub fn a_r_relations(r: &RMatrix) -> Vec<Element> {
    let n = r.dim();
    let p = |i: usize| if r.is_super() { r.p(i) } else { 0 };
    let t = |i: usize, j: usize| (i * n + j) as u8;
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let mut e = Element::zero();
                    for ee in 0..n {
                        for f in 0..n {
                            let v = r.get(a, f, b, ee);
                            if !v.is_zero() {
                                let s = sgn(p(a) * p(b) + p(c) * p(ee));
                                e.add_term(vec![t(f, c), t(ee, d)], &(v * &s));
                            }
                        }
                    }
                    for rr in 0..n {
                        for s in 0..n {
                            let v = r.get(s, c, rr, d);
                            if !v.is_zero() {
                                let sg = sgn(p(c) * p(d) + p(rr) * p(a));
                                e.add_term(vec![t(b, rr), t(a, s)], &-(v * &sg));
                            }
                        }
                    }
                    if !e.is_zero() {
                        out.push(e);
                    }
                }
            }
        }
    }
    out
}

fn matrix_skeleton(r: &RMatrix) -> Skeleton {
    let n = r.dim();
    let names = generator_names(n);
    let mut sk = Skeleton::new(&format!("A({})", r.name));
    for i in 0..n {
        for j in 0..n {
            let deg = if r.is_super() { (r.p(i) + r.p(j)) & 1 } else { 0 };
            let g = sk.gen(&names[i][j], deg);
            if n == 2 {
                sk.weight(g, if i == j { 3 } else { -4 });
            }
        }
    }
    sk
}

/// The quantum matrix bialgebra `A(R)` with compiled, overlap-checked rules.
pub fn a_r_presentation(r: &RMatrix) -> Result<Pres> {
    Ok(compile_relations(matrix_skeleton(r), &a_r_relations(r), CompileOptions::default())?.into_pres())
}

/// Coefficients of `ba = x1 ab, ca = x2 ac, db = x3 bd, dc = x4 cd, cb = x5 bc, da = ad + x6 bc`.
#[derive(Clone, Debug, PartialEq)]
pub struct InverseData {
    pub x: [Scalar; 6],
}

impl InverseData {
    pub fn read(p: &Presentation) -> Result<Self> {
        let ix = |s: &str| p.idx(s);
        let (a, b, c, d) = (ix("a")?, ix("b")?, ix("c")?, ix("d")?);
        let single = |l: u8, r: u8, w: &[u8]| -> Result<Scalar> {
            let rhs = p.rule(l, r).cloned().unwrap_or_else(|| Element::word(vec![l, r], Scalar::one()));
            let cf = rhs.coeff(w);
            if rhs.len() != 1 || cf.is_zero() {
                return Err(QgwError::NotSolvable(format!("{} is not a scaled exchange", p.word_string(&[l, r]))));
            }
            Ok(cf)
        };
        let x1 = single(b, a, &[a, b])?;
        let x2 = single(c, a, &[a, c])?;
        let x3 = single(d, b, &[b, d])?;
        let x4 = single(d, c, &[c, d])?;
        let x5 = single(c, b, &[b, c])?;
        let da = p.rule(d, a).ok_or_else(|| QgwError::NotSolvable("no rule for da".into()))?;
        let rest = da.sub(&Element::word(vec![a, d], Scalar::one()));
        let x6 = rest.coeff(&[b, c]);
        if !rest.sub(&Element::word(vec![b, c], x6.clone())).is_empty() {
            return Err(QgwError::NotSolvable("da is not ad + x·bc".into()));
        }
        Ok(InverseData { x: [x1, x2, x3, x4, x5, x6] })
    }
}

/// Adjoins `a⁻¹` and `d⁻¹` to a `2×2` quantum matrix algebra.
pub fn with_inverses_2x2(p: &Presentation) -> Result<(Pres, InverseData)> {
    let data = InverseData::read(p)?;
    let [x1, x2, x3, x4, _, x6] = data.x.clone();
    let mut sk = Skeleton::new(&format!("{}[a⁻¹,d⁻¹]", p.name));
    let (ai, a) = sk.invertible("a");
    let b = sk.gen("b", p.gens()[p.idx("b")? as usize].degree);
    let c = sk.gen("c", p.gens()[p.idx("c")? as usize].degree);
    let (di, d) = sk.invertible("d");
    for (g, w) in [(ai, 3), (a, 3), (b, -4), (c, -4), (di, 3), (d, 3)] {
        sk.weight(g, w);
    }
    let map = [a, b, c, d];
    let old = [p.idx("a")?, p.idx("b")?, p.idx("c")?, p.idx("d")?];
    let to_new = |x: u8| map[old.iter().position(|&o| o == x).expect("2x2 generator")];
    for ((l, r), rhs) in p.to_skeleton().rules {
        sk.rule(to_new(l), to_new(r), rhs.map_words(|w| w.iter().map(|&x| to_new(x)).collect()));
    }
    let inv = |s: &Scalar| s.inv();
    let w = |word: Vec<u8>, s: Scalar| Element::word(word, s);
    sk.rule(b, ai, w(vec![ai, b], inv(&x1)?));
    sk.rule(c, ai, w(vec![ai, c], inv(&x2)?));
    sk.rule(di, b, w(vec![b, di], inv(&x3)?));
    sk.rule(di, c, w(vec![c, di], inv(&x4)?));
    let k12 = x6.try_div(&(&x1 * &x2))?;
    let k34 = x6.try_div(&(&x3 * &x4))?;
    let k1234 = x6.try_div(&(&(&x1 * &x2) * &(&x3 * &x4)))?;
    sk.rule(d, ai, w(vec![ai, d], Scalar::one()).add(&w(vec![ai, ai, b, c], -k12)));
    sk.rule(di, a, w(vec![a, di], Scalar::one()).add(&w(vec![b, c, di, di], -k34)));
    sk.rule(di, ai, w(vec![ai, di], Scalar::one()).add(&w(vec![ai, ai, b, c, di, di], k1234)));
    let ext = Presentation::from_skeleton(sk, p.step_cap())?;
    let rep = overlap_check(&ext, 200, 13)?;
    if !rep.ok() {
        return Err(QgwError::ConfluenceFailure(rep.failures.join("; ")));
    }
    Ok((ext.into_pres(), data))
}

fn lin(p: &Presentation, terms: &[(Scalar, &[&str])]) -> Result<Element> {
    crate::catalog::lin(p, terms)
}

/// Matrix coproduct, counit `δ_ij`, and antipode
/// `S(t) = [[a⁻¹ + a⁻¹bd⁻¹ca⁻¹, −a⁻¹bd⁻¹], [−d⁻¹ca⁻¹, d⁻¹ + d⁻¹ca⁻¹bd⁻¹]]`.
pub fn quantum_matrix_hopf(p: &Pres, mode: Mode) -> Result<HopfData> {
    let one = Scalar::one();
    let m1 = -Scalar::one();
    let names = generator_names(2);
    let ts = TensorSquare::new(p, mode)?;
    let mut delta = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let mut t = TensorElement::zero(2, mode);
            for k in 0..2 {
                t.add_scaled(&TensorElement::pure(&[&p.g(&names[i][k])?, &p.g(&names[k][j])?], mode), &one);
            }
            delta.push((names[i][j].clone(), t));
        }
    }
    let s_a = lin(p, &[(one.clone(), &["a^-1"]), (one.clone(), &["a^-1", "b", "d^-1", "c", "a^-1"])])?;
    let s_b = lin(p, &[(m1.clone(), &["a^-1", "b", "d^-1"])])?;
    let s_c = lin(p, &[(m1, &["d^-1", "c", "a^-1"])])?;
    let s_d = lin(p, &[(one.clone(), &["d^-1"]), (one.clone(), &["d^-1", "c", "a^-1", "b", "d^-1"])])?;
    let not_unipotent = |what: &str| QgwError::NotSolvable(format!("{what} is not unipotent"));
    let inv_s = |e: &Element, what: &str| p.unipotent_inverse(e, 16)?.ok_or_else(|| not_unipotent(what));
    let s_ai = inv_s(&s_a, "S(a)")?;
    let s_di = inv_s(&s_d, "S(d)")?;
    let d_ai = ts.invert(&delta[0].1, 16)?.ok_or_else(|| not_unipotent("Δa"))?;
    let d_di = ts.invert(&delta[3].1, 16)?.ok_or_else(|| not_unipotent("Δd"))?;
    let zero = Scalar::zero();
    let mut maps: Vec<(&str, TensorElement, Scalar, Option<Element>)> = vec![
        ("a", delta[0].1.clone(), one.clone(), Some(s_a)),
        ("b", delta[1].1.clone(), zero.clone(), Some(s_b)),
        ("c", delta[2].1.clone(), zero, Some(s_c)),
        ("d", delta[3].1.clone(), one.clone(), Some(s_d)),
    ];
    maps.push(("a^-1", d_ai, one.clone(), Some(s_ai)));
    maps.push(("d^-1", d_di, one, Some(s_di)));
    HopfData::from_named(&format!("Hopf {}", p.name), p.clone(), mode, &maps, None)
}

/// `S(t)·t = t·S(t) = 1` with `t` the matrix of generators.
pub fn antipode_matrix_check(h: &HopfData) -> Result<Report> {
    let p = &h.pres;
    let names = generator_names(2);
    let t = OperatorMatrix::of_generators("t", p.clone(), &names)?;
    let mut s_entries = Vec::new();
    for row in &names {
        for n in row {
            s_entries.push(h.antipode_gen(p.idx(n)?)?.clone());
        }
    }
    let s = OperatorMatrix::new("S(t)", p.clone(), 2, s_entries)?;
    let mut rep = Report::new(format!("matrix antipode of {}", h.name));
    for (label, prod) in [("S(t)t", s.mul(&t)?), ("tS(t)", t.mul(&s)?)] {
        for i in 0..2 {
            for j in 0..2 {
                let want = if i == j { Element::one() } else { Element::zero() };
                let got = prod.get(i, j);
                rep.expect(*got == want, || format!("{label}[{i}][{j}] = {}", p.show(got)));
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::{check_hopf_axioms, HopfCheckOptions};
    use crate::rmatlab::catalog;

    fn zero_in(p: &Presentation, terms: &[(Scalar, &[&str])]) -> bool {
        lin(p, terms).unwrap().is_zero()
    }

    #[test]
    fn ac_quantum_matrices() {
        let p = a_r_presentation(&catalog::alexander_conway().unwrap()).unwrap();
        let (q, qi, l, o) = (Scalar::q(), Scalar::q_pow(-1), Scalar::q_minus_qinv(), Scalar::one());
        let rels: Vec<Vec<(Scalar, &[&str])>> = vec![
            vec![(o.clone(), &["b", "a"]), (-q.clone(), &["a", "b"])],
            vec![(o.clone(), &["c", "a"]), (-q, &["a", "c"])],
            vec![(o.clone(), &["d", "b"]), (qi.clone(), &["b", "d"])],
            vec![(o.clone(), &["d", "c"]), (qi, &["c", "d"])],
            vec![(o.clone(), &["c", "b"]), (-o.clone(), &["b", "c"])],
            vec![(o.clone(), &["d", "a"]), (-o.clone(), &["a", "d"]), (-l, &["b", "c"])],
            vec![(o.clone(), &["b", "b"])],
            vec![(o, &["c", "c"])],
        ];
        for r in &rels {
            assert!(zero_in(&p, r));
        }
        assert_eq!(p.rule_list().len(), rels.len());
    }

    #[test]
    fn misoriented_exchange_is_not_confluent() {
        let p = a_r_presentation(&catalog::alexander_conway().unwrap()).unwrap();
        let mut sk = p.to_skeleton();
        let (a, b, c, d) = (p.idx("a").unwrap(), p.idx("b").unwrap(), p.idx("c").unwrap(), p.idx("d").unwrap());
        for (k, rhs) in sk.rules.iter_mut() {
            if *k == (d, a) {
                *rhs = Element::word(vec![a, d], Scalar::one())
                    .add(&Element::word(vec![b, c], -Scalar::q_minus_qinv()));
            }
        }
        // b² = c² = 0 kills every overlap residue, so the flipped sign is still confluent.
        let flipped = Presentation::from_skeleton(sk.clone(), p.step_cap()).unwrap();
        assert!(overlap_check(&flipped, 50, 1).unwrap().ok());
        for (k, rhs) in sk.rules.iter_mut() {
            if *k == (d, a) {
                *rhs = rhs.add(&Element::word(vec![a, b], Scalar::one()));
            }
        }
        let bad = Presentation::from_skeleton(sk, p.step_cap()).unwrap();
        let rep = overlap_check(&bad, 50, 1).unwrap();
        assert!(!rep.ok());
        assert!(rep.failures.iter().any(|f| f.starts_with("overlap d*") && f.contains("*a:")), "{:?}", rep.failures);
    }

    #[test]
    fn omega_super_quantum_matrices() {
        let p = a_r_presentation(&catalog::r_omega_super().unwrap()).unwrap();
        let (q2, qm2, o) = (Scalar::q_pow(2), Scalar::q_pow(-2), Scalar::one());
        let one_minus_q2 = &o - &q2;
        let rels: Vec<Vec<(Scalar, &[&str])>> = vec![
            vec![(o.clone(), &["b", "a"]), (-o.clone(), &["a", "b"])],
            vec![(o.clone(), &["c", "a"]), (-q2.clone(), &["a", "c"])],
            vec![(o.clone(), &["d", "b"]), (-o.clone(), &["b", "d"])],
            vec![(o.clone(), &["d", "c"]), (-qm2, &["c", "d"])],
            vec![(o.clone(), &["c", "b"]), (q2, &["b", "c"])],
            vec![(o.clone(), &["d", "a"]), (-o.clone(), &["a", "d"]), (-one_minus_q2, &["b", "c"])],
            vec![(o.clone(), &["b", "b"])],
            vec![(o, &["c", "c"])],
        ];
        for r in &rels {
            assert!(zero_in(&p, r), "{:?}", r);
        }
        assert_eq!(p.rule_list().len(), rels.len());
        let (pi, _) = with_inverses_2x2(&p).unwrap();
        let h = quantum_matrix_hopf(&pi, Mode::Super).unwrap();
        assert!(antipode_matrix_check(&h).unwrap().ok());
        let rep = check_hopf_axioms(&h, HopfCheckOptions::default()).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn ac_hopf_structure() {
        let p = a_r_presentation(&catalog::alexander_conway().unwrap()).unwrap();
        let (pi, data) = with_inverses_2x2(&p).unwrap();
        assert_eq!(data.x[4], Scalar::one());
        let h = quantum_matrix_hopf(&pi, Mode::Bosonic).unwrap();
        assert!(antipode_matrix_check(&h).unwrap().ok());
        let rep = check_hopf_axioms(&h, HopfCheckOptions::default()).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn super_quantum_matrices() {
        let r = catalog::alexander_conway_super().unwrap();
        let p = a_r_presentation(&r).unwrap();
        let (q, qi, l, o) = (Scalar::q(), Scalar::q_pow(-1), Scalar::q_minus_qinv(), Scalar::one());
        let rels: Vec<Vec<(Scalar, &[&str])>> = vec![
            vec![(o.clone(), &["b", "a"]), (-q.clone(), &["a", "b"])],
            vec![(o.clone(), &["c", "a"]), (-q, &["a", "c"])],
            vec![(o.clone(), &["d", "b"]), (-qi.clone(), &["b", "d"])],
            vec![(o.clone(), &["d", "c"]), (-qi, &["c", "d"])],
            vec![(o.clone(), &["c", "b"]), (o.clone(), &["b", "c"])],
            vec![(o.clone(), &["d", "a"]), (-o.clone(), &["a", "d"]), (l, &["b", "c"])],
            vec![(o.clone(), &["b", "b"])],
            vec![(o, &["c", "c"])],
        ];
        for r in &rels {
            assert!(zero_in(&p, r), "{:?}", r);
        }
        let (pi, _) = with_inverses_2x2(&p).unwrap();
        let h = quantum_matrix_hopf(&pi, Mode::Super).unwrap();
        assert!(antipode_matrix_check(&h).unwrap().ok());
        let rep = check_hopf_axioms(&h, HopfCheckOptions::default()).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn gl21_compiles() {
        for r in [catalog::gl_nm(2, 1).unwrap(), catalog::gl_nm_super(2, 1).unwrap()] {
            let p = a_r_presentation(&r).unwrap();
            assert_eq!(p.ngens(), 9);
        }
    }
}
