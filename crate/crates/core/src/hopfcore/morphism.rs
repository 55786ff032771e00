use super::HopfData;
use crate::error::{QgwError, Result};
use crate::gtensor::TensorElement;
use crate::ncalg::{Element, Pres};
use crate::report::Report;
use crate::scalars::Scalar;

/// An algebra map given by generator images, extended multiplicatively.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    pub src: Pres,
    pub dst: Pres,
    images: Vec<Element>,
}

impl AlgebraMap {
    pub fn new(src: Pres, dst: Pres, images: Vec<Element>) -> Result<Self> {
        if images.len() != src.ngens() {
            return Err(QgwError::Dimension(format!("{} images for {} generators", images.len(), src.ngens())));
        }
        let images = images.iter().map(|e| dst.normal_form(e)).collect::<Result<Vec<_>>>()?;
        Ok(AlgebraMap { src, dst, images })
    }

    /// Images keyed by source generator name.
    pub fn from_named(src: Pres, dst: Pres, images: &[(&str, Element)]) -> Result<Self> {
        let mut slots = vec![None; src.ngens()];
        for (n, e) in images {
            slots[src.idx(n)? as usize] = Some(e.clone());
        }
        let images = slots
            .into_iter()
            .enumerate()
            .map(|(i, e)| e.ok_or_else(|| QgwError::Format(format!("no image for {}", src.gens()[i].name))))
            .collect::<Result<Vec<_>>>()?;
        AlgebraMap::new(src, dst, images)
    }

    pub fn image(&self, i: u8) -> &Element {
        &self.images[i as usize]
    }

    pub fn apply_word(&self, w: &[u8]) -> Result<Element> {
        let mut acc = Element::one();
        for &x in w {
            acc = self.dst.mul(&acc, &self.images[x as usize])?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    pub fn apply(&self, e: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            out.add_scaled(&self.apply_word(w)?, c);
        }
        Ok(out)
    }

    /// `φ⊗…⊗φ`; legs are mapped independently, so no signs arise for even maps.
    pub fn apply_tensor(&self, t: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero(t.arity(), t.mode());
        for (legs, c) in t.terms() {
            let imgs = legs.iter().map(|w| self.apply_word(w)).collect::<Result<Vec<_>>>()?;
            let refs: Vec<&Element> = imgs.iter().collect();
            out.add_scaled(&TensorElement::pure(&refs, t.mode()), c);
        }
        Ok(out)
    }

    /// Every rewrite rule of the source is sent to zero.
    pub fn relations_check(&self) -> Result<Report> {
        let mut r = Report::new(format!("{} -> {} respects relations", self.src.name, self.dst.name));
        for ((a, b), rhs) in self.src.rule_list() {
            let diff = self.apply_word(&[a, b])?.sub(&self.apply(rhs)?);
            r.expect(diff.is_zero(), || {
                format!("rule {}: residual {}", self.src.word_string(&[a, b]), self.dst.show(&diff))
            });
        }
        Ok(r)
    }

    /// Degrees are preserved on generators.
    pub fn degree_check(&self) -> Report {
        let mut r = Report::new("degree preservation");
        for (i, g) in self.src.gens().iter().enumerate() {
            let d = self.dst.degree(&self.images[i]);
            r.expect(self.images[i].is_zero() || d == Some(g.degree), || format!("{} changes degree", g.name));
        }
        r
    }
}

/// `φ` intertwines counit, coproduct and antipode generator by generator.
pub fn hopf_map_check(src: &HopfData, dst: &HopfData, phi: &AlgebraMap) -> Result<Report> {
    let mut r = Report::new(format!("{} -> {} is a Hopf map", src.name, dst.name));
    r.absorb(phi.relations_check()?);
    r.absorb(phi.degree_check());
    let names = |i: u8| src.pres.gens()[i as usize].name.clone();
    for i in 0..src.pres.ngens() as u8 {
        let img = phi.image(i);
        let e_l: Scalar = dst.counit(img);
        r.expect(&e_l == src.eps_gen(i), || format!("counit differs on {}", names(i)));
        let d_l = dst.coproduct(img)?;
        let d_r = phi.apply_tensor(&src.delta_gen(i).with_mode(dst.mode))?;
        r.expect(d_l == d_r, || {
            format!("coproduct differs on {}: {}", names(i), d_l.sub(&d_r).show(&dst.pres))
        });
        if src.has_antipode() && dst.has_antipode() {
            let s_l = dst.antipode(img)?;
            let s_r = phi.apply(src.antipode_gen(i)?)?;
            r.expect(s_l == s_r, || {
                format!("antipode differs on {}: {}", names(i), dst.pres.show(&s_l.sub(&s_r)))
            });
        }
    }
    Ok(r)
}
