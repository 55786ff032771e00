//! R-matrices on `V⊗V` with an optional index grading.
//!
//! Entries are addressed as `R^a_c^b_d`, stored at row `n·a + b`, column
//! `n·c + d` (zero-based).

pub mod catalog;
mod io;

use std::collections::HashMap;

pub use catalog::{by_name, catalog_names};
pub use io::{RMatrixFile, RMatrixEntry};

use crate::error::{QgwError, Result};
use crate::linalg::SMatrix;
use crate::report::Report;
use crate::scalars::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix {
    pub name: String,
    n: usize,
    m: SMatrix,
    grading: Vec<u8>,
    is_super: bool,
}

/// Nonzero entry `R^a_c^b_d` as `(a, c, b, d, value)`.
pub type Entry = (usize, usize, usize, usize, Scalar);

impl RMatrix {
    /// Validates invertibility, and the null-degree condition when `is_super`.
    pub fn new(name: &str, n: usize, m: SMatrix, grading: Vec<u8>, is_super: bool) -> Result<Self> {
        if m.rows() != n * n || m.cols() != n * n {
            return Err(QgwError::Dimension(format!("expected {}x{} matrix", n * n, n * n)));
        }
        if grading.len() != n {
            return Err(QgwError::Dimension("grading length must equal n".into()));
        }
        m.inverse()?;
        let r = RMatrix { name: name.to_string(), n, m, grading, is_super };
        if is_super && !r.null_degree_holds(&r.grading) {
            return Err(QgwError::NullDegreeViolated);
        }
        Ok(r)
    }

    /// Bosonic matrix from a closure over `(a, c, b, d)`.
    pub fn from_fn(name: &str, n: usize, f: impl Fn(usize, usize, usize, usize) -> Scalar) -> Result<Self> {
        let m = SMatrix::from_fn(n * n, n * n, |r, c| f(r / n, c / n, r % n, c % n));
        RMatrix::new(name, n, m, vec![0; n], false)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &SMatrix {
        &self.m
    }

    pub fn grading(&self) -> &[u8] {
        &self.grading
    }

    pub fn is_super(&self) -> bool {
        self.is_super
    }

    pub fn p(&self, i: usize) -> u8 {
        self.grading[i]
    }

    /// `R^a_c^b_d`.
    pub fn get(&self, a: usize, c: usize, b: usize, d: usize) -> &Scalar {
        self.m.get(a * self.n + b, c * self.n + d)
    }

    pub fn entries(&self) -> Vec<Entry> {
        let n = self.n;
        self.m.nonzeros().into_iter().map(|(r, c, v)| (r / n, c / n, r % n, c % n, v)).collect()
    }

    pub fn with_grading(&self, grading: Vec<u8>) -> Result<Self> {
        RMatrix::new(&self.name, self.n, self.m.clone(), grading, self.is_super)
    }

    pub fn inverse(&self) -> Result<SMatrix> {
        self.m.inverse()
    }

    /// Permutation `P` on `V⊗V`.
    pub fn permutation(n: usize) -> SMatrix {
        SMatrix::from_fn(n * n, n * n, |r, c| if r / n == c % n && r % n == c / n { Scalar::one() } else { Scalar::zero() })
    }

    pub fn null_degree_holds(&self, p: &[u8]) -> bool {
        self.entries().iter().all(|(a, c, b, d, _)| (p[*a] + p[*b] + p[*c] + p[*d]).is_multiple_of(2))
    }

    /// `R12 R13 R23 = R23 R13 R12` as matrices on `V⊗V⊗V`.
    pub fn qybe_check(&self) -> Report {
        let n = self.n;
        let id = SMatrix::identity(n);
        let r12 = self.m.kron(&id);
        let r23 = id.kron(&self.m);
        let p23 = id.kron(&RMatrix::permutation(n));
        let r13 = p23.mul(&r12).mul(&p23);
        let lhs = r12.mul(&r13).mul(&r23);
        let rhs = r23.mul(&r13).mul(&r12);
        let mut rep = Report::new(format!("QYBE for {}", self.name));
        let diff = lhs.sub(&rhs);
        rep.expect(diff.is_zero(), || residual_witness(&diff));
        rep
    }

    /// Graded braid relation in index form with the sign factors
    /// `(-1)^{p(e)(p(f)+p(c))}` and `(-1)^{p(r)(p(s)+p(a))}`.
    pub fn sybe_check(&self) -> Result<Report> {
        if !self.null_degree_holds(&self.grading) {
            return Err(QgwError::NullDegreeViolated);
        }
        let p = &self.grading;
        let nz = self.entries();
        let sign = |x: u8| if x % 2 == 1 { Scalar::from_i64(-1) } else { Scalar::one() };
        let mut acc: HashMap<[usize; 6], Scalar> = HashMap::new();
        // LHS: R^b_e^a_f R^i_k^f_c R^k_j^e_d keyed by (i, j, a, b, c, d).
        for (b, e, a, f, v1) in &nz {
            for (i, k, f2, c, v2) in &nz {
                if f2 != f {
                    continue;
                }
                for (k2, j, e2, d, v3) in &nz {
                    if k2 != k || e2 != e {
                        continue;
                    }
                    let s = sign(p[*e] * (p[*f] + p[*c]));
                    let t = &(&(v1 * v2) * v3) * &s;
                    *acc.entry([*i, *j, *a, *b, *c, *d]).or_insert_with(Scalar::zero) += &t;
                }
            }
        }
        // RHS: R^i_p^b_r R^p_j^a_s R^r_d^s_c.
        for (i, pp, b, r, v1) in &nz {
            for (pp2, j, a, s, v2) in &nz {
                if pp2 != pp {
                    continue;
                }
                for (r2, d, s2, c, v3) in &nz {
                    if r2 != r || s2 != s {
                        continue;
                    }
                    let sg = sign(p[*r] * (p[*s] + p[*a]));
                    let t = &(&(v1 * v2) * v3) * &sg;
                    *acc.entry([*i, *j, *a, *b, *c, *d]).or_insert_with(Scalar::zero) -= &t;
                }
            }
        }
        let mut rep = Report::new(format!("SYBE for {}", self.name));
        let mut bad: Vec<_> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        bad.sort_by_key(|x| x.0);
        rep.checked = self.n.pow(6);
        for (k, v) in bad.into_iter().take(8) {
            rep.failures.push(format!("index {:?}: residual {}", k, v));
        }
        Ok(rep)
    }

    /// `(PR − q)(PR + q⁻¹) = 0`.
    pub fn hecke_check(&self) -> Report {
        let n2 = self.n * self.n;
        let pr = RMatrix::permutation(self.n).mul(&self.m);
        let id = SMatrix::identity(n2);
        let a = pr.sub(&id.scale(&Scalar::q()));
        let b = pr.add(&id.scale(&Scalar::q_pow(-1)));
        let prod = a.mul(&b);
        let mut rep = Report::new(format!("Hecke condition for {}", self.name));
        rep.expect(prod.is_zero(), || residual_witness(&prod));
        rep
    }

    /// `R^f_k^e_l R^l_i^k_j = (q − q⁻¹) R^f_i^e_j + δ^f_j δ^e_i`, the index
    /// form of the Hecke condition.
    pub fn hecke_index_check(&self) -> Report {
        let n = self.n;
        let lam = Scalar::q_minus_qinv();
        let mut rep = Report::new(format!("Hecke identity in index form for {}", self.name));
        for f in 0..n {
            for e in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        let mut lhs = Scalar::zero();
                        for k in 0..n {
                            for l in 0..n {
                                let x = self.get(f, k, e, l);
                                if x.is_zero() {
                                    continue;
                                }
                                lhs += &(x * self.get(l, i, k, j));
                            }
                        }
                        let mut rhs = &lam * self.get(f, i, e, j);
                        if f == j && e == i {
                            rhs += &Scalar::one();
                        }
                        let diff = &lhs - &rhs;
                        rep.expect(diff.is_zero(), || format!("(f,e,i,j)=({f},{e},{i},{j}): residual {diff}"));
                    }
                }
            }
        }
        rep
    }

    /// Every grading for which the null-degree condition holds.
    pub fn superizable_gradings(&self) -> Result<Vec<Vec<u8>>> {
        if self.n > 12 {
            return Err(QgwError::Dimension("grading search limited to n <= 12".into()));
        }
        Ok((0u32..1 << self.n)
            .map(|bits| (0..self.n).map(|i| ((bits >> i) & 1) as u8).collect::<Vec<u8>>())
            .filter(|p| self.null_degree_holds(p))
            .collect())
    }

    /// `R̲^a_c^b_d = (-1)^{p(a)p(b)} R^a_c^b_d`; applying it twice with the
    /// same grading returns the original entries.
    pub fn superize(&self, p: &[u8]) -> Result<RMatrix> {
        if p.len() != self.n {
            return Err(QgwError::Dimension("grading length must equal n".into()));
        }
        if !self.null_degree_holds(p) {
            return Err(QgwError::NotSuperizable);
        }
        let n = self.n;
        let m = SMatrix::from_fn(n * n, n * n, |r, c| {
            let v = self.m.get(r, c);
            if p[r / n] & p[r % n] & 1 == 1 {
                -v
            } else {
                v.clone()
            }
        });
        RMatrix::new(&format!("{} (super)", self.name), n, m, p.to_vec(), !self.is_super)
    }

    /// `(Q⊗Q)⁻¹ R (Q⊗Q)`.
    pub fn conjugate(&self, q: &SMatrix) -> Result<RMatrix> {
        let qq = q.kron(q);
        let m = qq.inverse()?.mul(&self.m).mul(&qq);
        RMatrix::new(&format!("{} conjugated", self.name), self.n, m, self.grading.clone(), self.is_super)
    }

    /// Compact display in the composite-index layout.
    pub fn show(&self) -> String {
        self.m.show()
    }
}

fn residual_witness(diff: &SMatrix) -> String {
    match diff.nonzeros().first() {
        Some((r, c, v)) => format!("first nonzero residual at ({r},{c}): {v}"),
        None => "zero residual".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_convention() {
        let r = by_name("ac").unwrap();
        assert_eq!(r.get(0, 1, 1, 0), &Scalar::q_minus_qinv());
        assert_eq!(r.matrix().get(1, 2), &Scalar::q_minus_qinv());
        assert_eq!(r.get(1, 1, 1, 1), &-Scalar::q_pow(-1));
    }

    #[test]
    fn braid_checks_agree_on_ungraded() {
        for name in ["ac", "omega", "gl2", "gl3", "gl(2|1)"] {
            let r = by_name(name).unwrap();
            assert!(r.qybe_check().ok(), "{name}");
            assert!(r.with_grading(vec![0; r.dim()]).unwrap().sybe_check().unwrap().ok(), "{name}");
        }
    }

    #[test]
    fn broken_matrix_fails_qybe() {
        let r = by_name("ac").unwrap();
        let mut m = r.matrix().clone();
        m.set(1, 2, Scalar::q());
        let bad = RMatrix::new("broken", 2, m, vec![0, 0], false).unwrap();
        assert!(!bad.qybe_check().ok());
    }

    #[test]
    fn superize_involutive_and_ac() {
        let r = by_name("ac").unwrap();
        let s = r.superize(&[0, 1]).unwrap();
        assert_eq!(s.matrix(), by_name("ac-super").unwrap().matrix());
        assert!(s.sybe_check().unwrap().ok());
        let back = s.superize(&[0, 1]).unwrap();
        assert_eq!(back.matrix(), r.matrix());
        assert!(matches!(r.superize(&[1, 1]).map(|x| x.is_super()), Ok(true)));
    }

    #[test]
    fn grading_search() {
        let r = by_name("ac").unwrap();
        assert!(r.superizable_gradings().unwrap().contains(&vec![0, 1]));
        let id = by_name("identity3").unwrap();
        assert_eq!(id.superizable_gradings().unwrap().len(), 8);
        let g = by_name("gl(2|1)").unwrap();
        assert!(g.superizable_gradings().unwrap().contains(&vec![0, 0, 1]));
    }

    #[test]
    fn sybe_needs_null_degree() {
        let odd_entry = RMatrix::from_fn("odd", 2, |a, c, b, d| {
            if (a, b) == (c, d) || (a, c, b, d) == (0, 0, 0, 1) {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .unwrap();
        let graded = odd_entry.with_grading(vec![0, 1]).unwrap();
        assert_eq!(graded.sybe_check(), Err(QgwError::NullDegreeViolated));
        assert_eq!(
            RMatrix::new("odd", 2, odd_entry.matrix().clone(), vec![0, 1], true),
            Err(QgwError::NullDegreeViolated)
        );
    }

    #[test]
    fn hecke_battery() {
        for name in ["ac", "omega", "gl2", "gl3", "q1"] {
            let r = by_name(name).unwrap();
            assert!(r.hecke_check().ok(), "{name}");
            assert!(r.hecke_index_check().ok(), "{name}");
        }
        assert!(!by_name("identity2").unwrap().hecke_check().ok());
    }

    #[test]
    fn super_family_sybe() {
        for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3), (2, 0), (0, 2)] {
            let s = catalog::gl_nm_super(n, m).unwrap();
            assert!(s.sybe_check().unwrap().ok(), "gl({n}|{m})");
        }
    }

    #[test]
    fn wrong_sign_breaks_sybe() {
        // The ungraded AC matrix read with grading (0,1) is null-degree but not a super solution.
        let r = by_name("ac").unwrap().with_grading(vec![0, 1]).unwrap();
        assert!(!r.sybe_check().unwrap().ok());
    }

    #[test]
    fn even_conjugation_invariance() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let s = catalog::gl_nm_super(2, 1).unwrap();
        for _ in 0..3 {
            let d: Vec<Scalar> = (0..3).map(|_| Scalar::from_i64(rng.gen_range(1..9))).collect();
            let c = s.conjugate(&SMatrix::diag(&d)).unwrap();
            assert!(c.null_degree_holds(c.grading()));
            assert!(c.sybe_check().unwrap().ok());
        }
    }
}
