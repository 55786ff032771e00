//! Dense matrices over an exact or floating coefficient type.

use std::fmt::Debug;

use num_complex::Complex64;

use crate::error::{QgwError, Result};
use crate::scalars::Scalar;

pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    /// Pivot quality; exact types only distinguish zero from nonzero.
    fn magnitude(&self) -> f64;
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn from_i64(n: i64) -> Self {
        Scalar::from_i64(n)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        Scalar::inv(self).ok()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        if Scalar::is_zero(self) {
            0.0
        } else {
            1.0
        }
    }
}

impl Coeff for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if self.norm() == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
    fn is_zero(&self) -> bool {
        self.norm() == 0.0
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type SMatrix = Matrix<Scalar>;
pub type CMatrix = Matrix<Complex64>;

impl<T: Coeff> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn diag(d: &[T]) -> Self {
        let mut m = Matrix::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.data[i * d.len() + i] = x.clone();
        }
        m
    }

    /// Matrix unit `E_ij` of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        m.data[i * n + j] = T::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Coeff, E>(&self, f: impl Fn(&T) -> std::result::Result<U, E>) -> std::result::Result<Matrix<U>, E> {
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<std::result::Result<_, _>>()? })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product `self ⊗ o` with row index `(i,k) ↦ i·o.rows + k`.
    pub fn kron(&self, o: &Self) -> Self {
        self.kron_signed(o, |_, _| false)
    }

    /// Kronecker product where `a_ij b_kl` is negated when `negate(j, k)`.
    fn kron_signed(&self, o: &Self, negate: impl Fn(usize, usize) -> bool) -> Self {
        let rows = self.rows * o.rows;
        let cols = self.cols * o.cols;
        let mut out = Matrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        let v = a.mul(b);
                        let v = if negate(j, k) { v.neg() } else { v };
                        out.set(i * o.rows + k, j * o.cols + l, v);
                    }
                }
            }
        }
        out
    }

    /// Graded Kronecker product for `(a⊗b)(v⊗w) = (-1)^{|b||v|} av⊗bw`:
    /// `o` represents an element of degree `b_deg`, and `grading[j]` is the
    /// degree of the `j`-th basis vector of the first factor.
    pub fn kron_graded(&self, o: &Self, b_deg: u8, grading: &[u8]) -> Self {
        self.kron_signed(o, |j, _| b_deg & grading[j] & 1 == 1)
    }

    pub fn trace(&self) -> T {
        let mut t = T::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t.add(self.get(i, i));
        }
        t
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(QgwError::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .filter(|&r| !a.get(r, col).is_zero())
                .max_by(|&x, &y| a.get(x, col).magnitude().total_cmp(&a.get(y, col).magnitude()))
                .ok_or(QgwError::Singular)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a.get(col, col).inv().ok_or(QgwError::Singular)?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col {
                    let f = a.get(r, col).clone();
                    if !f.is_zero() {
                        a.axpy_row(r, col, &f);
                        inv.axpy_row(r, col, &f);
                    }
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, c: &T) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = self.data[idx].mul(c);
        }
    }

    /// `row[r] -= f * row[src]`.
    fn axpy_row(&mut self, r: usize, src: usize, f: &T) {
        for j in 0..self.cols {
            let s = self.get(src, j).clone();
            if s.is_zero() {
                continue;
            }
            let idx = r * self.cols + j;
            self.data[idx] = self.data[idx].sub(&f.mul(&s));
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows)
                .filter(|&r| !a.get(r, col).is_zero())
                .max_by(|&x, &y| a.get(x, col).magnitude().total_cmp(&a.get(y, col).magnitude()))
            else {
                continue;
            };
            a.swap_rows(row, p);
            let inv = a.get(row, col).inv().expect("nonzero pivot");
            a.scale_row(row, &inv);
            for r in 0..a.rows {
                if r != row {
                    let f = a.get(r, col).clone();
                    if !f.is_zero() {
                        a.axpy_row(r, row, &f);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    /// Basis of the right null space, as column vectors.
    pub fn null_space(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = r.get(row, f).neg();
                }
                v
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Entries as (row, col, value) for nonzero values.
    pub fn nonzeros(&self) -> Vec<(usize, usize, T)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }
}

impl SMatrix {
    pub fn show(&self) -> String {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect::<Vec<_>>().join(", "))
            .map(|r| format!("[{r}]"))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn eval_q(&self, z: Complex64) -> Result<CMatrix> {
        self.try_map(|s| s.eval_q(z))
    }

    /// Evaluates at a full coordinate vector indexed like the indeterminates.
    pub fn eval_point(&self, point: &[Complex64]) -> Result<CMatrix> {
        self.try_map(|s| s.eval_point(point))
    }
}

impl CMatrix {
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    /// `max|a-b| <= tol * max(1, max|a|, max|b|)`.
    pub fn approx_eq(&self, o: &CMatrix, tol: f64) -> bool {
        let scale = 1f64.max(self.max_abs()).max(o.max_abs());
        self.sub(o).max_abs() <= tol * scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_inverse() {
        let q = Scalar::q();
        let m = SMatrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => q.clone(),
            (0, 1) => Scalar::one(),
            (1, 0) => Scalar::zero(),
            _ => -&q,
        });
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), SMatrix::identity(2));
    }

    #[test]
    fn null_space_basis() {
        let m = SMatrix::from_fn(1, 3, |_, j| Scalar::from_i64(j as i64 + 1));
        let ns = m.null_space();
        assert_eq!(ns.len(), 2);
        for v in ns {
            let col = SMatrix::from_fn(3, 1, |i, _| v[i].clone());
            assert!(m.mul(&col).is_zero());
        }
    }

    #[test]
    fn graded_kron_sign() {
        let a = SMatrix::identity(2);
        let b = SMatrix::unit(2, 0, 1);
        let k = a.kron_graded(&b, 1, &[0, 1]);
        assert_eq!(k.get(0, 1), &Scalar::one());
        assert_eq!(k.get(2, 3), &Scalar::from_i64(-1));
    }
}
