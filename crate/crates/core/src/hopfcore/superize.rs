use super::HopfData;
use crate::error::{QgwError, Result};
use crate::gtensor::{Mode, TensorElement};
use crate::ncalg::{Element, Presentation};
use crate::scalars::Scalar;

/// Degree of each generator read off from `g x g = ±x`.
fn degrees_from_g(h: &HopfData, g: u8) -> Result<Vec<u8>> {
    let p = &h.pres;
    let mut deg = Vec::with_capacity(p.ngens());
    for x in 0..p.ngens() as u8 {
        let conj = p.word_nf(&[g, x, g])?;
        let xe = Element::letter(x);
        if conj == xe {
            deg.push(0);
        } else if conj == xe.neg() {
            deg.push(1);
        } else {
            return Err(QgwError::NotGradedCentral(p.gens()[x as usize].name.clone()));
        }
    }
    Ok(deg)
}

/// The ℤ2 transmutation by the distinguished involutive group-like `g`:
/// `Δ̲x = Σ x₍₁₎ g^{deg x₍₂₎} ⊗ x₍₂₎` and `S̲x = g^{deg x} S(x)`, with the
/// algebra and counit unchanged and degrees taken from the adjoint action of `g`.
pub fn superize(h: &HopfData) -> Result<HopfData> {
    let g = h.g.ok_or_else(|| QgwError::Format(format!("{} has no distinguished group-like", h.name)))?;
    let p = &h.pres;
    if p.word_nf(&[g, g])? != Element::one() {
        return Err(QgwError::NotInvolutive);
    }
    let deg = degrees_from_g(h, g)?;
    let mut sk = p.to_skeleton();
    for (gen, d) in sk.gens.iter_mut().zip(&deg) {
        gen.degree = *d;
    }
    sk.name = format!("{} (super)", p.name);
    let sp = Presentation::from_skeleton(sk, p.step_cap())?.into_pres();
    let n = p.ngens();
    let mut delta = Vec::with_capacity(n);
    let mut anti = Vec::with_capacity(n);
    for x in 0..n as u8 {
        let mut d = TensorElement::zero(2, Mode::Super);
        for (legs, c) in h.delta_gen(x).terms() {
            let odd = sp.word_degree(&legs[1]) == 1;
            let left = if odd { sp.word_nf(&[legs[0].as_slice(), &[g]].concat())? } else { sp.word_nf(&legs[0])? };
            let right = Element::word(legs[1].clone(), Scalar::one());
            d.add_scaled(&TensorElement::pure(&[&left, &right], Mode::Super), c);
        }
        delta.push(d);
        if h.has_antipode() {
            let s = h.antipode_gen(x)?;
            anti.push(if deg[x as usize] == 1 { sp.mul(&Element::letter(g), s)? } else { s.clone() });
        }
    }
    let eps = (0..n as u8).map(|x| h.eps_gen(x).clone()).collect();
    HopfData::new(
        &format!("{} (superized)", h.name),
        sp,
        Mode::Super,
        delta,
        eps,
        if h.has_antipode() { Some(anti) } else { None },
        Some(g),
    )
}

/// Adjoins an involutive group-like `g` acting by `g x = (-1)^{parity(x)} x g`.
pub fn z2_extend(h: &HopfData, parity: &[u8]) -> Result<HopfData> {
    let p = &h.pres;
    if parity.len() != p.ngens() {
        return Err(QgwError::Dimension("parity must cover every generator".into()));
    }
    let wpar = |w: &[u8]| w.iter().fold(0u8, |acc, &x| acc ^ (parity[x as usize] & 1));
    for ((a, b), rhs) in p.rule_list() {
        let lp = wpar(&[a, b]);
        if let Some((w, _)) = rhs.terms().find(|(w, _)| wpar(w) != lp) {
            return Err(QgwError::ActionNotCompatible(format!(
                "rule {} -> {} mixes parities",
                p.word_string(&[a, b]),
                p.word_string(w)
            )));
        }
    }
    let mut sk = p.to_skeleton();
    sk.name = format!("{}⋊Z2", p.name);
    let g = sk.gen("g", 0);
    sk.gens[g as usize].inverse = Some(g);
    for x in 0..p.ngens() as u8 {
        let sign = if parity[x as usize] & 1 == 1 { -1 } else { 1 };
        sk.rule(g, x, Element::word(vec![x, g], Scalar::from_i64(sign)));
    }
    let ep = Presentation::from_skeleton(sk, p.step_cap())?.into_pres();
    let mut delta: Vec<TensorElement> = (0..p.ngens() as u8).map(|x| h.delta_gen(x).clone()).collect();
    let gl = Element::letter(g);
    delta.push(TensorElement::pure(&[&gl, &gl], h.mode));
    let mut eps: Vec<Scalar> = (0..p.ngens() as u8).map(|x| h.eps_gen(x).clone()).collect();
    eps.push(Scalar::one());
    let anti = if h.has_antipode() {
        let mut s = (0..p.ngens() as u8).map(|x| h.antipode_gen(x).cloned()).collect::<Result<Vec<_>>>()?;
        s.push(gl.clone());
        Some(s)
    } else {
        None
    };
    HopfData::new(&format!("{}⋊Z2", h.name), ep, h.mode, delta, eps, anti, Some(g))
}

/// `½(1⊗1 + 1⊗g + g⊗1 − g⊗g)`.
pub fn r_g(g: u8, mode: Mode) -> TensorElement {
    let one = Element::one();
    let ge = Element::letter(g);
    let half = Scalar::from_ratio(1, 2);
    let mut t = TensorElement::pure(&[&one, &one], mode);
    t = t.add(&TensorElement::pure(&[&one, &ge], mode));
    t = t.add(&TensorElement::pure(&[&ge, &one], mode));
    t = t.sub(&TensorElement::pure(&[&ge, &ge], mode));
    t.scale(&half)
}
