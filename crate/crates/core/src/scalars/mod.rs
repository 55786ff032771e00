//! Exact coefficient field: rational functions over `ℚ(i)` in a small,
//! globally registered set of commuting indeterminates.

mod gauss;
mod poly;
mod text;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::RwLock;

use num_complex::Complex64;

pub use gauss::GaussRat;
pub use poly::{Mono, Poly, MAX_VARS};

use crate::error::{QgwError, Result};

static REGISTRY: RwLock<Vec<String>> = RwLock::new(Vec::new());

const BUILTIN: [&str; 5] = ["q", "la1", "la2", "mu1", "mu2"];

fn with_registry<T>(f: impl FnOnce(&mut Vec<String>) -> T) -> T {
    let mut reg = REGISTRY.write().expect("registry lock");
    if reg.is_empty() {
        reg.extend(BUILTIN.iter().map(|s| s.to_string()));
    }
    f(&mut reg)
}

/// Index of an indeterminate, registering it if new.
pub fn var_index(name: &str) -> Result<usize> {
    with_registry(|reg| {
        if let Some(i) = reg.iter().position(|n| n == name) {
            return Ok(i);
        }
        if reg.len() >= MAX_VARS {
            return Err(QgwError::TooManyVariables(MAX_VARS));
        }
        reg.push(name.to_string());
        Ok(reg.len() - 1)
    })
}

/// Index of an already registered indeterminate.
pub fn lookup_var(name: &str) -> Option<usize> {
    with_registry(|reg| reg.iter().position(|n| n == name))
}

pub fn var_name(i: usize) -> String {
    with_registry(|reg| reg.get(i).cloned().unwrap_or_else(|| format!("v{i}")))
}

pub fn var_names() -> Vec<String> {
    with_registry(|reg| reg.clone())
}

pub const Q: usize = 0;

/// A canonical fraction `num / den`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Scalar { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_i64(n: i64) -> Self {
        Scalar::from_gauss(GaussRat::from_i64(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_gauss(GaussRat::from_ratio(n, d))
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        Scalar { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn i() -> Self {
        Scalar::from_gauss(GaussRat::i())
    }

    pub fn var(v: usize) -> Self {
        Scalar { num: Poly::var(v), den: Poly::one() }
    }

    pub fn named(name: &str) -> Result<Self> {
        Ok(Scalar::var(var_index(name)?))
    }

    pub fn q() -> Self {
        Scalar::var(Q)
    }

    /// `q^n` for any integer `n`.
    pub fn q_pow(n: i32) -> Self {
        Scalar::var_pow(Q, n)
    }

    pub fn var_pow(v: usize, n: i32) -> Self {
        let m = Poly::monomial(Mono::var(v, n.unsigned_abs() as u16), GaussRat::one());
        if n >= 0 {
            Scalar { num: m, den: Poly::one() }
        } else {
            Scalar { num: Poly::one(), den: m }
        }
    }

    /// `q - q^{-1}`.
    pub fn q_minus_qinv() -> Self {
        &Scalar::q() - &Scalar::q_pow(-1)
    }

    /// Builds and canonicalizes `num / den`.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(QgwError::DivisionByZero);
        }
        Ok(Scalar::canonical(num, den))
    }

    pub fn from_poly(num: Poly) -> Self {
        Scalar { num, den: Poly::one() }
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.is_constant() {
            let c = den.lc().inv().expect("nonzero denominator");
            return Scalar { num: num.scale(&c), den: Poly::one() };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        Scalar::normalize_den(num, den)
    }

    fn normalize_den(num: Poly, den: Poly) -> Self {
        let lc = den.lc();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let c = lc.inv().expect("nonzero");
            Scalar { num: num.scale(&c), den: den.scale(&c) }
        }
    }

    /// Re-derives the canonical form; a no-op on values built through the API.
    pub fn canonicalize(&self) -> Self {
        Scalar::canonical(self.num.clone(), self.den.clone())
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<GaussRat> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    /// Bitmask of the indeterminates occurring in the value.
    pub fn vars(&self) -> u32 {
        self.num.vars() | self.den.vars()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(QgwError::DivisionByZero);
        }
        Ok(Scalar::normalize_den(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, o: &Scalar) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let e = n.unsigned_abs();
        Ok(Scalar { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self * &Scalar::from_i64(n)
    }

    /// Replaces indeterminate `v` by `val`.
    pub fn subs(&self, v: usize, val: &Scalar) -> Result<Self> {
        let n = subs_poly(&self.num, v, val)?;
        let d = subs_poly(&self.den, v, val)?;
        n.try_div(&d)
    }

    /// Evaluates at a point given as a full coordinate vector.
    pub fn eval_point(&self, point: &[Complex64]) -> Result<Complex64> {
        let d = self.den.eval(point);
        if d.norm() < 1e-12 {
            return Err(QgwError::PoleAtPoint);
        }
        Ok(self.num.eval(point) / d)
    }

    /// Evaluates with a name → value assignment covering every indeterminate present.
    pub fn eval(&self, assignment: &HashMap<String, Complex64>) -> Result<Complex64> {
        let mut point = vec![Complex64::new(0.0, 0.0); MAX_VARS];
        let used = self.vars();
        for (v, slot) in point.iter_mut().enumerate() {
            if used & (1 << v) != 0 {
                let name = var_name(v);
                *slot = *assignment.get(&name).ok_or(QgwError::MissingAssignment(name))?;
            }
        }
        self.eval_point(&point)
    }

    /// Convenience evaluation at `q = z`.
    pub fn eval_q(&self, z: Complex64) -> Result<Complex64> {
        let mut point = vec![Complex64::new(0.0, 0.0); MAX_VARS];
        point[Q] = z;
        let used = self.vars();
        if used & !1 != 0 {
            let v = (used & !1).trailing_zeros() as usize;
            return Err(QgwError::MissingAssignment(var_name(v)));
        }
        self.eval_point(&point)
    }

    pub fn parse(s: &str) -> Result<Self> {
        text::parse(s)
    }
}

fn subs_poly(p: &Poly, v: usize, val: &Scalar) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for (m, c) in p.terms() {
        let mut mm = *m;
        let e = mm.0[v];
        mm.0[v] = 0;
        let rest = Scalar::from_poly(Poly::monomial(mm, c.clone()));
        acc += &(&rest * &val.pow(e as i32)?);
    }
    Ok(acc)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::print(self))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Scalar { num: self.num.add(&o.num), den: Poly::one() };
            }
            return Scalar::canonical(self.num.add(&o.num), self.den.clone());
        }
        let g = Poly::gcd(&self.den, &o.den);
        let bd = self.den.exact_div(&g).expect("gcd divides");
        let dd = o.den.exact_div(&g).expect("gcd divides");
        let num = self.num.mul(&dd).add(&o.num.mul(&bd));
        let den = self.den.mul(&dd);
        Scalar::canonical(num, den)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.mul(&o.num), den: Poly::one() };
        }
        let g1 = Poly::gcd(&self.num, &o.den);
        let g2 = Poly::gcd(&o.num, &self.den);
        let a = self.num.exact_div(&g1).expect("gcd divides");
        let d = o.den.exact_div(&g1).expect("gcd divides");
        let c = o.num.exact_div(&g2).expect("gcd divides");
        let b = self.den.exact_div(&g2).expect("gcd divides");
        Scalar::normalize_den(a.mul(&c), b.mul(&d))
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::try_div`] to handle it.
    fn div(self, o: &Scalar) -> Scalar {
        self.try_div(o).expect("division by zero")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { (&self).$m(&o) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar { (&self).$m(o) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { self.$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::q()
    }

    #[test]
    fn cancellation() {
        let a = Scalar::q_minus_qinv();
        let b = (&q() * &q() - Scalar::one()).inv().unwrap();
        assert_eq!(&a * &b, Scalar::q_pow(-1));
    }

    #[test]
    fn additive_identity() {
        let x = (&q() + Scalar::from_i64(3)) / (&q() * &q() + Scalar::i());
        assert_eq!(&x + &Scalar::zero(), x);
    }

    #[test]
    fn irrep_entry_single_fraction() {
        let l1 = Scalar::named("la1").unwrap();
        let l2 = Scalar::named("la2").unwrap();
        let p = &l1 * &l2;
        let e = (&p - &p.inv().unwrap()) / Scalar::q_minus_qinv();
        assert!(!e.denom().is_constant());
        assert_eq!(e.canonicalize(), e);
        assert_eq!(&e * &Scalar::q_minus_qinv(), &p - &p.inv().unwrap());
    }

    #[test]
    fn eval_examples() {
        let c = |x: f64| Complex64::new(x, 0.0);
        let a = Scalar::q_minus_qinv();
        assert!((a.eval_q(c(2.0)).unwrap() - c(1.5)).norm() < 1e-12);
        let b = (&q() * &q() - Scalar::one()) / Scalar::q_minus_qinv();
        assert!((b.eval_q(c(3.0)).unwrap() - c(3.0)).norm() < 1e-12);
        let p = Scalar::q_minus_qinv().inv().unwrap();
        assert_eq!(p.eval_q(c(1.0)), Err(QgwError::PoleAtPoint));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(q().try_div(&Scalar::zero()), Err(QgwError::DivisionByZero));
    }

    #[test]
    fn substitution() {
        let a = Scalar::q_minus_qinv();
        let s = a.subs(Q, &(-&Scalar::q_pow(3))).unwrap();
        assert_eq!(s, &(-&Scalar::q_pow(3)) + &Scalar::q_pow(-3));
    }
}
