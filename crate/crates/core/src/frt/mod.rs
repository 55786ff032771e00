//! FRT constructions from an R-matrix: the bialgebra `A(R)` of quantum matrices,
//! its Hopf extension for `2×2` matrices, quantum determinants, and the dual
//! operator matrices `l±` checked against the `RLL` relations.

mod ansatz;
mod det;
mod pairing;
mod quantum_matrix;
mod theta;

pub use ansatz::{l_omega, l_standard, m_omega, m_standard};
pub use det::{eval_matrix, matrix_rep_check, qdet, qdet_check, rho_matrices, super_det_check};
pub use pairing::{duality_pairing_check, graded_pairing, pairing_matrices};
pub use quantum_matrix::{
    a_r_presentation, a_r_relations, antipode_matrix_check, generator_names, quantum_matrix_hopf, with_inverses_2x2,
    InverseData,
};
pub use theta::{matrix_bialgebra, theta_iso_check};

use crate::error::{QgwError, Result};
use crate::ncalg::{Element, Pres};
use crate::report::Report;
use crate::rmatlab::RMatrix;
use crate::scalars::Scalar;

/// An `n×n` matrix with entries in a presented algebra.
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    pub label: String,
    pub pres: Pres,
    n: usize,
    entries: Vec<Element>,
}

impl OperatorMatrix {
    /// Row-major entries, normal-formed on construction.
    pub fn new(label: &str, pres: Pres, n: usize, entries: Vec<Element>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(QgwError::Dimension(format!("{} entries for a {n}x{n} matrix", entries.len())));
        }
        let entries = entries.iter().map(|e| pres.normal_form(e)).collect::<Result<Vec<_>>>()?;
        Ok(OperatorMatrix { label: label.to_string(), pres, n, entries })
    }

    /// Matrix of generators named by `names[i][j]`.
    pub fn of_generators(label: &str, pres: Pres, names: &[Vec<String>]) -> Result<Self> {
        let n = names.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in names {
            for name in row {
                entries.push(pres.g(name)?);
            }
        }
        OperatorMatrix::new(label, pres, n, entries)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.n + j]
    }

    /// Product in the algebra, entries multiplied without signs.
    pub fn mul(&self, o: &OperatorMatrix) -> Result<OperatorMatrix> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Element::zero();
                for k in 0..n {
                    acc = acc.add(&self.pres.mul(self.get(i, k), o.get(k, j))?);
                }
                out.push(acc);
            }
        }
        OperatorMatrix::new(&format!("{}{}", self.label, o.label), self.pres.clone(), n, out)
    }

    /// Entry `(i, j)` is homogeneous of degree `p(i) + p(j)` or zero.
    pub fn degree_check(&self, p: &[u8]) -> Report {
        let mut r = Report::new(format!("degrees of {}", self.label));
        for i in 0..self.n {
            for j in 0..self.n {
                let e = self.get(i, j);
                let want = (p[i] + p[j]) & 1;
                r.expect(e.is_zero() || self.pres.degree(e) == Some(want), || {
                    format!("{}[{i}][{j}] = {} is not of degree {want}", self.label, self.pres.show(e))
                });
            }
        }
        r
    }

    pub fn show(&self) -> String {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let cells: Vec<String> = (0..self.n).map(|j| self.pres.show(self.get(i, j))).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("{} = [{}]", self.label, rows.join(", "))
    }
}

fn sign(bits: u8) -> Scalar {
    if bits & 1 == 1 {
        Scalar::from_i64(-1)
    } else {
        Scalar::one()
    }
}

/// `R y₂ x₁ = x₁ y₂ R` entrywise, with the super sign rule when `R` is super:
///
/// `Σ (-1)^{p(e)(p(c)+p(f))} R^b_e^a_f x_{fc} y_{ed} = Σ (-1)^{p(r)(p(a)+p(s))} y_{br} x_{as} R^r_d^s_c`.
pub fn frt_relation_check(r: &RMatrix, x: &OperatorMatrix, y: &OperatorMatrix) -> Result<Report> {
    let n = r.dim();
    if x.dim() != n || y.dim() != n {
        return Err(QgwError::Dimension("operator matrices must match the R-matrix".into()));
    }
    let pres = &x.pres;
    let p = |i: usize| if r.is_super() { r.p(i) } else { 0 };
    let mut rep = Report::new(format!("RLL for ({}, {}) with {}", x.label, y.label, r.name));
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let mut lhs = Element::zero();
                    for e in 0..n {
                        for f in 0..n {
                            let rv = r.get(b, e, a, f);
                            if rv.is_zero() {
                                continue;
                            }
                            let c0 = rv * &sign(p(e) * (p(c) + p(f)));
                            lhs.add_scaled(&pres.mul(x.get(f, c), y.get(e, d))?, &c0);
                        }
                    }
                    let mut rhs = Element::zero();
                    for rr in 0..n {
                        for s in 0..n {
                            let rv = r.get(rr, d, s, c);
                            if rv.is_zero() {
                                continue;
                            }
                            let c0 = rv * &sign(p(rr) * (p(a) + p(s)));
                            rhs.add_scaled(&pres.mul(y.get(b, rr), x.get(a, s))?, &c0);
                        }
                    }
                    let diff = lhs.sub(&rhs);
                    rep.expect(diff.is_zero(), || format!("(a,b,c,d)=({a},{b},{c},{d}): {}", pres.show(&diff)));
                }
            }
        }
    }
    Ok(rep)
}

/// The three families `(l⁺,l⁺)`, `(l⁺,l⁻)`, `(l⁻,l⁻)`.
pub fn frt_families_check(r: &RMatrix, plus: &OperatorMatrix, minus: &OperatorMatrix) -> Result<Report> {
    let mut rep = Report::new(format!("RLL families of {} with {}", plus.pres.name, r.name));
    rep.absorb(frt_relation_check(r, plus, plus)?);
    rep.absorb(frt_relation_check(r, plus, minus)?);
    rep.absorb(frt_relation_check(r, minus, minus)?);
    Ok(rep)
}
