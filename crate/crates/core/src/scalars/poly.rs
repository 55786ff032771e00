//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! Terms are kept sorted by graded-lex order, largest first, with no zero
//! coefficients. The gcd is a recursive primitive-PRS over `ℚ(i)[x_1..x_k]`.

use std::cmp::Ordering;

use super::gauss::GaussRat;

/// Maximum number of indeterminates a monomial can carry.
pub const MAX_VARS: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub [u16; MAX_VARS]);

impl Mono {
    pub fn one() -> Self {
        Mono([0; MAX_VARS])
    }

    pub fn var(v: usize, e: u16) -> Self {
        let mut m = [0; MAX_VARS];
        m[v] = e;
        Mono(m)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a += *b;
        }
        Mono(m)
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self | o`.
    pub fn quotient_of(&self, o: &Mono) -> Mono {
        let mut m = o.0;
        for (a, b) in m.iter_mut().zip(self.0.iter()) {
            *a -= *b;
        }
        Mono(m)
    }

    pub fn min(&self, o: &Mono) -> Mono {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a = (*a).min(*b);
        }
        Mono(m)
    }

    pub fn vars(&self) -> u32 {
        let mut mask = 0;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Graded lexicographic comparison.
    pub fn grlex(&self, o: &Mono) -> Ordering {
        self.total().cmp(&o.total()).then_with(|| self.0.cmp(&o.0))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Mono, GaussRat)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(Mono::one(), c)] }
        }
    }

    pub fn monomial(m: Mono, c: GaussRat) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: usize) -> Self {
        Poly::monomial(Mono::var(v, 1), GaussRat::one())
    }

    /// Builds from arbitrary (unsorted, possibly repeated) terms.
    pub fn from_terms(mut raw: Vec<(Mono, GaussRat)>) -> Self {
        raw.sort_by(|a, b| b.0.grlex(&a.0));
        let mut terms: Vec<(Mono, GaussRat)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => {
                    if let Some((_, lc)) = terms.last() {
                        if lc.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push((m, c));
                }
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, GaussRat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<GaussRat> {
        if self.terms.is_empty() {
            Some(GaussRat::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Mono, GaussRat)> {
        self.terms.first()
    }

    pub fn lc(&self) -> GaussRat {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(GaussRat::zero)
    }

    pub fn vars(&self) -> u32 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.vars())
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|(m, d)| (*m, d * c)).collect() }
    }

    pub fn mul_mono(&self, mono: &Mono, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, d)| (m.mul(mono), d * c)).collect() }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.merge(o, true)
    }

    fn merge(&self, o: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &o.terms[j];
            match ma.grlex(mb) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, if negate { -cb } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (m, c) in &o.terms[j..] {
            out.push((*m, if negate { -c } else { c.clone() }));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return o.mul_mono(m, c);
        }
        if o.is_monomial() {
            let (m, c) = &o.terms[0];
            return self.mul_mono(m, c);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                raw.push((ma.mul(mb), ca * cb));
            }
        }
        Poly::from_terms(raw)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multivariate division by a single divisor in graded-lex order.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let (ld, lcd) = d.terms[0].clone();
        let lcd_inv = lcd.inv().expect("nonzero leading coefficient");
        let mut p = self.clone();
        let mut quot = Vec::new();
        let mut rem = Vec::new();
        while let Some((lm, lc)) = p.terms.first().cloned() {
            if ld.divides(&lm) {
                let qm = ld.quotient_of(&lm);
                let qc = &lc * &lcd_inv;
                p = p.sub(&d.mul_mono(&qm, &qc));
                quot.push((qm, qc));
            } else {
                rem.push((lm, lc));
                p.terms.remove(0);
            }
        }
        (Poly::from_terms(quot), Poly::from_terms(rem))
    }

    /// Exact quotient, `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if let Some(c) = d.constant_value() {
            return c.inv().map(|ci| self.scale(&ci));
        }
        if d.is_monomial() {
            let (dm, dc) = &d.terms[0];
            let ci = dc.inv()?;
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                terms.push((dm.quotient_of(m), c * &ci));
            }
            return Some(Poly { terms });
        }
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Scales so the graded-lex leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().unwrap()),
        }
    }

    fn min_mono(&self) -> Mono {
        let mut it = self.terms.iter();
        let first = it.next().map(|t| t.0).unwrap_or_default();
        it.fold(first, |acc, (m, _)| acc.min(m))
    }

    pub fn degree_in(&self, v: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.0[v]).max().unwrap_or(0)
    }

    /// Coefficients with respect to variable `v`, indexed by power of `v`.
    pub fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Mono, GaussRat)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut mm = *m;
            let e = mm.0[v] as usize;
            mm.0[v] = 0;
            buckets[e].push((mm, c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    pub fn from_coeffs_in(v: usize, coeffs: &[Poly]) -> Poly {
        let mut raw = Vec::new();
        for (e, p) in coeffs.iter().enumerate() {
            for (m, c) in &p.terms {
                let mut mm = *m;
                mm.0[v] += e as u16;
                raw.push((mm, c.clone()));
            }
        }
        Poly::from_terms(raw)
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Poly::one();
        }
        let ma = a.min_mono();
        let mb = b.min_mono();
        let m = ma.min(&mb);
        let a1 = strip_mono(a, &ma);
        let b1 = strip_mono(b, &mb);
        let g = gcd_stripped(&a1, &b1);
        g.mul_mono(&m, &GaussRat::one()).monic()
    }

    pub fn eval(&self, point: &[num_complex::Complex64]) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_complex();
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= point[v].powi(e as i32);
                }
            }
            acc += t;
        }
        acc
    }
}

fn strip_mono(p: &Poly, m: &Mono) -> Poly {
    if m.is_one() {
        return p.clone();
    }
    Poly { terms: p.terms.iter().map(|(mm, c)| (m.quotient_of(mm), c.clone())).collect() }
}

fn gcd_stripped(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let va = a.vars();
    let vb = b.vars();
    let all = va | vb;
    if all.count_ones() == 1 {
        return euclid(a, b);
    }
    let v = all.trailing_zeros() as usize;
    let bit = 1u32 << v;
    if va & bit == 0 {
        return gcd_content(a, &content_in(b, v));
    }
    if vb & bit == 0 {
        return gcd_content(b, &content_in(a, v));
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = Poly::gcd(&ca, &cb);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let g = primitive_prs(pa, pb, v);
    g.mul(&c).monic()
}

/// gcd(p, c) where `c` does not involve the main variable of `p`.
fn gcd_content(p: &Poly, c: &Poly) -> Poly {
    if c.is_constant() {
        return Poly::one();
    }
    let vs = c.vars();
    let pv = p.vars();
    // Reduce p to the gcd of its coefficients w.r.t. every variable absent from c.
    let mut acc = p.clone();
    for v in 0..MAX_VARS {
        let bit = 1u32 << v;
        if pv & bit != 0 && vs & bit == 0 && acc.vars() & bit != 0 {
            acc = content_in(&acc, v);
            if acc.is_constant() {
                return Poly::one();
            }
        }
    }
    Poly::gcd(&acc, c)
}

fn content_in(p: &Poly, v: usize) -> Poly {
    let mut g = Poly::zero();
    for c in p.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        g = Poly::gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn euclid(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = if a.terms[0].0.grlex(&b.terms[0].0) == Ordering::Less {
        (b.clone(), a.clone())
    } else {
        (a.clone(), b.clone())
    };
    while !y.is_zero() {
        let (_, r) = x.divrem(&y);
        x = y;
        y = r.monic();
    }
    x.monic()
}

fn primitive_prs(a: Poly, b: Poly, v: usize) -> Poly {
    let (mut x, mut y) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    loop {
        if y.degree_in(v) == 0 {
            // y is a nonzero element of the coefficient ring and both are primitive.
            return Poly::one();
        }
        let r = pseudo_rem(&x, &y, v);
        if r.is_zero() {
            let c = content_in(&y, v);
            return y.exact_div(&c).expect("content divides").monic();
        }
        let c = content_in(&r, v);
        let r = r.exact_div(&c).expect("content divides").monic();
        x = y;
        y = r;
    }
}

fn pseudo_rem(a: &Poly, b: &Poly, v: usize) -> Poly {
    let bc = b.coeffs_in(v);
    let lcb = bc.last().unwrap().clone();
    let mut r = a.coeffs_in(v);
    while r.len() >= bc.len() && !r.is_empty() {
        let lc = r.last().unwrap().clone();
        let shift = r.len() - bc.len();
        for c in r.iter_mut() {
            *c = c.mul(&lcb);
        }
        for (k, bk) in bc.iter().enumerate() {
            r[k + shift] = r[k + shift].sub(&bk.mul(&lc));
        }
        debug_assert!(r.last().unwrap().is_zero());
        while matches!(r.last(), Some(p) if p.is_zero()) {
            r.pop();
        }
    }
    Poly::from_coeffs_in(v, &r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(0)
    }

    fn c(n: i64) -> Poly {
        Poly::constant(GaussRat::from_i64(n))
    }

    #[test]
    fn univariate_gcd() {
        // (q^2-1) and (q-1)^2 share q-1
        let a = q().mul(&q()).sub(&c(1));
        let b = q().sub(&c(1)).pow(2);
        assert_eq!(Poly::gcd(&a, &b), q().sub(&c(1)));
    }

    #[test]
    fn multivariate_gcd() {
        let x = Poly::var(1);
        let y = Poly::var(2);
        let common = x.mul(&y).sub(&q());
        let a = common.mul(&x.add(&c(3)));
        let b = common.mul(&y.sub(&q().mul(&q())));
        assert_eq!(Poly::gcd(&a, &b), common.monic());
    }

    #[test]
    fn divrem_exact() {
        let a = q().pow(3).sub(&c(1));
        let b = q().sub(&c(1));
        let quotient = a.exact_div(&b).unwrap();
        assert_eq!(quotient, q().mul(&q()).add(&q()).add(&c(1)));
        assert!(a.exact_div(&q().add(&c(2))).is_none());
    }
}
