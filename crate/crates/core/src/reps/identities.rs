use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::SMatrix;
use crate::report::Report;
use crate::scalars::MAX_VARS;

#[derive(Clone, Debug)]
pub struct MatrixIdentity {
    pub label: String,
    pub lhs: SMatrix,
    pub rhs: SMatrix,
}

/// Matrix identities plus facts established by rewriting; the matrices can be
/// compared exactly or at numeric values of `q`.
#[derive(Clone, Debug)]
pub struct IdentitySet {
    pub name: String,
    pub matrices: Vec<MatrixIdentity>,
    pub symbolic: Report,
}

impl IdentitySet {
    pub fn new(name: impl Into<String>) -> Self {
        let name = name.into();
        IdentitySet { symbolic: Report::new(""), name, matrices: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, lhs: SMatrix, rhs: SMatrix) {
        self.matrices.push(MatrixIdentity { label: label.into(), lhs, rhs });
    }

    pub fn fact(&mut self, holds: bool, label: impl FnOnce() -> String) {
        self.symbolic.expect(holds, label);
    }

    pub fn extend(&mut self, o: IdentitySet) {
        self.matrices.extend(o.matrices);
        self.symbolic.absorb(o.symbolic);
    }

    pub fn len(&self) -> usize {
        self.matrices.len() + self.symbolic.checked
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn exact_report(&self) -> Report {
        let mut rep = Report::new(self.name.clone());
        for m in &self.matrices {
            let shapes = m.lhs.rows() == m.rhs.rows() && m.lhs.cols() == m.rhs.cols();
            rep.expect(shapes && m.lhs == m.rhs, || {
                if shapes {
                    format!("{}: residual\n{}", m.label, m.lhs.sub(&m.rhs).show())
                } else {
                    format!("{}: shape mismatch", m.label)
                }
            });
        }
        rep.absorb(self.symbolic.clone());
        rep
    }

    /// Both sides at each `q` agree to relative tolerance `tol`; any other
    /// indeterminates take values seeded by `q`.
    pub fn numeric_report(&self, qs: &[Complex64], tol: f64) -> Report {
        let mut rep = Report::new(format!("{} at sampled q", self.name));
        for z in qs {
            let point = sample_point(*z);
            for m in &self.matrices {
                match (m.lhs.eval_point(&point), m.rhs.eval_point(&point)) {
                    (Ok(a), Ok(b)) => rep.expect(a.approx_eq(&b, tol), || {
                        format!("{} at q = {z}: deviation {:e}", m.label, a.sub(&b).max_abs())
                    }),
                    (Err(e), _) | (_, Err(e)) => rep.fail(format!("{} at q = {z}: {e}", m.label)),
                }
            }
        }
        rep
    }
}

fn sample_point(z: Complex64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(z.re.to_bits() ^ z.im.to_bits().rotate_left(17));
    let mut point = vec![z];
    point.extend(sample_q(rng.gen(), MAX_VARS - 1));
    point
}

/// `count` complex values with `|q|` in `[0.5, 0.9] ∪ [1.1, 2]`.
pub fn sample_q(seed: u64, count: usize) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = if rng.gen_bool(0.5) { rng.gen_range(0.5..0.9) } else { rng.gen_range(1.1..2.0) };
            Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Scalar;

    #[test]
    fn exact_and_numeric_agree() {
        let q = Scalar::q();
        let mut s = IdentitySet::new("demo");
        let a = SMatrix::diag(&[&q * &q, Scalar::one()]);
        s.push("square", a.clone(), SMatrix::diag(&[q.clone(), Scalar::one()]).mul(&SMatrix::diag(&[q, Scalar::one()])));
        assert!(s.exact_report().ok());
        assert!(s.numeric_report(&sample_q(3, 3), 1e-9).ok());
        s.push("wrong", a, SMatrix::identity(2));
        assert!(!s.exact_report().ok());
        assert!(!s.numeric_report(&sample_q(3, 3), 1e-9).ok());
    }

    #[test]
    fn samples_avoid_unit_circle() {
        for z in sample_q(11, 50) {
            assert!((z.norm() - 1.0).abs() >= 0.1);
        }
    }
}
