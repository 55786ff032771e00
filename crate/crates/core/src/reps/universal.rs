use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use super::{diag_by, eval_tensor, q_quarter, phase_quarter, rep_for, IdentitySet, Rep, RepLabel};
use crate::catalog::{gl11_hopf, gl11_omega_hopf, uq_hopf, uq_omega_hopf};
use crate::error::{QgwError, Result};
use crate::hopfcore::HopfData;
use crate::linalg::SMatrix;
use crate::par::par_map;
use crate::report::Report;
use crate::rmatlab::RMatrix;
use crate::scalars::Scalar;

/// Which quasitriangular structure is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RKind {
    Standard,
    Omega,
    Super,
    SuperOmega,
}

static HOPF: [OnceLock<Arc<HopfData>>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];

impl RKind {
    pub const ALL: [RKind; 4] = [RKind::Standard, RKind::Omega, RKind::Super, RKind::SuperOmega];

    pub fn is_super(self) -> bool {
        matches!(self, RKind::Super | RKind::SuperOmega)
    }

    fn slot(self) -> usize {
        self as usize
    }

    /// The Hopf algebra carrying this structure, built once.
    pub fn hopf(self) -> Result<Arc<HopfData>> {
        if let Some(h) = HOPF[self.slot()].get() {
            return Ok(h.clone());
        }
        let h = match self {
            RKind::Standard => uq_hopf()?,
            RKind::Omega => uq_omega_hopf()?,
            RKind::Super => gl11_hopf()?,
            RKind::SuperOmega => gl11_omega_hopf()?,
        };
        Ok(HOPF[self.slot()].get_or_init(|| Arc::new(h)).clone())
    }

    pub fn name(self) -> &'static str {
        match self {
            RKind::Standard => "standard",
            RKind::Omega => "omega",
            RKind::Super => "super",
            RKind::SuperOmega => "superomega",
        }
    }
}

impl fmt::Display for RKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RKind {
    type Err = QgwError;

    fn from_str(s: &str) -> Result<Self> {
        RKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| QgwError::UnknownName(s.into()))
    }
}

fn one_minus_q2() -> Scalar {
    &Scalar::one() - &Scalar::q_pow(2)
}

/// Graded flip `A⊗B → B⊗A`, `e_i⊗f_j ↦ (−1)^{p_i p_j} f_j⊗e_i`.
pub fn flip_matrix(a: &Rep, b: &Rep) -> SMatrix {
    let (da, db) = (a.dim(), b.dim());
    let mut m = SMatrix::zeros(da * db, da * db);
    for i in 0..da {
        for j in 0..db {
            let s = if a.grading()[i] & b.grading()[j] & 1 == 1 { -Scalar::one() } else { Scalar::one() };
            m.set(j * da + i, i * db + j, s);
        }
    }
    m
}

/// The universal R-matrix of `kind` evaluated on `a⊗b`.
pub fn r_on(kind: RKind, a: &Rep, b: &Rep) -> Result<SMatrix> {
    let (wa, wb) = (a.weights()?, b.weights()?);
    let (da, db) = (a.dim(), b.dim());
    let pre = |i: usize, j: usize| -> Result<Scalar> {
        let (h1, h2, k1, k2) = (wa.h1[i], wa.h2[i], wb.h1[j], wb.h2[j]);
        match kind {
            RKind::Standard => Ok(&phase_quarter(-h2 * k2)? * &q_quarter(h1 * k1 - h2 * k2)?),
            RKind::Omega => Ok(&phase_quarter(-h2 * k2)? * &q_quarter((h1 - h2) * (k1 + k2))?),
            // q^{-(h⊗N + N⊗h)} with h = (H1+H2)/2, N = H2/2.
            RKind::Super => q_quarter(-((h1 + h2) * k2 + h2 * (k1 + k2))),
            // q^{-2N⊗h}.
            RKind::SuperOmega => q_quarter(-2 * h2 * (k1 + k2)),
        }
    };
    let d = diag_by(da * db, |ij| pre(ij / db, ij % db))?;
    let tail = match kind {
        RKind::Standard | RKind::Omega => {
            let e = a.image("K2")?.mul(a.image("X+")?);
            let f = b.image("K2^-1")?.mul(b.image("X-")?);
            let f = if kind == RKind::Omega {
                diag_by(db, |j| q_quarter(-2 * (wb.h1[j] + wb.h2[j])))?.mul(&f)
            } else {
                f
            };
            e.kron(&f)
        }
        RKind::Super | RKind::SuperOmega => {
            let qn = diag_by(da, |i| q_quarter(2 * wa.h2[i]))?;
            let left = qn.mul(a.image("eta")?);
            let right_pre = diag_by(db, |j| {
                let (h, n2) = (wb.h1[j] + wb.h2[j], wb.h2[j]);
                if kind == RKind::Super {
                    q_quarter(-2 * n2)
                } else {
                    q_quarter(-2 * n2 - 2 * h)
                }
            })?;
            let right = right_pre.mul(b.image("eta+")?);
            left.kron_graded(&right, 1, a.grading())
        }
    };
    Ok(d.mul(&SMatrix::identity(da * db).add(&tail.scale(&one_minus_q2()))))
}

/// `ℛ` of `kind` on two irreducible representations, as an R-matrix.
pub fn universal_r_eval(l1: &RepLabel, l2: &RepLabel, kind: RKind) -> Result<RMatrix> {
    l1.ints()?;
    l2.ints()?;
    let (a, b) = (rep_for(l1, kind)?, rep_for(l2, kind)?);
    let m = r_on(kind, &a, &b)?;
    let name = format!("ℛ[{kind}] on {l1}⊗{l2}");
    if kind.is_super() {
        RMatrix::new(&name, 2, m, vec![0, 1], true)
    } else {
        RMatrix::new(&name, 2, m, vec![0, 0], false)
    }
}

/// `ℛ13` on `A⊗B⊗C` from the value of `ℛ` on `A⊗C`.
fn r13(a: &Rep, b: &Rep, c: &Rep, rac: &SMatrix) -> SMatrix {
    let ia = SMatrix::identity(a.dim());
    let to = ia.kron(&flip_matrix(b, c));
    let back = ia.kron(&flip_matrix(c, b));
    back.mul(&rac.kron(&SMatrix::identity(b.dim()))).mul(&to)
}

/// Intertwining on every generator, both hexagon identities and the braid
/// relation on `a⊗b⊗c`, for a given evaluation of `ℛ`.
pub fn qt_identities(a: &Rep, b: &Rep, c: &Rep, r: impl Fn(&Rep, &Rep) -> Result<SMatrix>) -> Result<IdentitySet> {
    let h = a.hopf.clone();
    let p = &h.pres;
    let mut set = IdentitySet::new(format!("quasitriangularity of {}", h.name));
    let rab = r(a, b)?;
    for (x, gen) in p.gens().iter().enumerate() {
        let d = h.delta_gen(x as u8);
        let dd = eval_tensor(d, &[a, b]);
        let dop = eval_tensor(&d.flip(p), &[a, b]);
        set.push(format!("Δ′({})ℛ = ℛΔ({})", gen.name, gen.name), dop.mul(&rab), rab.mul(&dd));
    }
    let (ab, bc) = (a.tensor(b)?, b.tensor(c)?);
    let (rac, rbc) = (r(a, c)?, r(b, c)?);
    let r12 = rab.kron(&SMatrix::identity(c.dim()));
    let r23 = SMatrix::identity(a.dim()).kron(&rbc);
    let r13 = r13(a, b, c, &rac);
    set.push("(Δ⊗id)ℛ = ℛ13ℛ23", r(&ab, c)?, r13.mul(&r23));
    set.push("(id⊗Δ)ℛ = ℛ13ℛ12", r(a, &bc)?, r13.mul(&r12));
    set.push("ℛ12ℛ13ℛ23 = ℛ23ℛ13ℛ12", r12.mul(&r13).mul(&r23), r23.mul(&r13).mul(&r12));
    Ok(set)
}

pub fn quasitriangularity_identities(labels: [&RepLabel; 3], kind: RKind) -> Result<IdentitySet> {
    let reps = labels.iter().map(|l| rep_for(l, kind)).collect::<Result<Vec<_>>>()?;
    let mut set = qt_identities(&reps[0], &reps[1], &reps[2], |x, y| r_on(kind, x, y))?;
    set.name = format!("quasitriangularity [{kind}] on {}⊗{}⊗{}", labels[0], labels[1], labels[2]);
    Ok(set)
}

pub fn quasitriangularity_check(l1: &RepLabel, l2: &RepLabel, l3: &RepLabel, kind: RKind) -> Result<Report> {
    Ok(quasitriangularity_identities([l1, l2, l3], kind)?.exact_report())
}

/// Braid relation for `ℛ` on `A⊗B⊗B` and `A⊗A⊗B` for every ordered pair of labels.
pub fn qybe_sweep(labels: &[RepLabel], kind: RKind) -> Result<Report> {
    let pairs: Vec<(RepLabel, RepLabel)> =
        labels.iter().flat_map(|a| labels.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let results = par_map(&pairs, |(x, y)| -> Result<Report> {
        let (a, b) = (rep_for(x, kind)?, rep_for(y, kind)?);
        let mut rep = Report::new(format!("{x}, {y}"));
        for (u, v, w) in [(&a, &b, &b), (&a, &a, &b)] {
            let r = |s: &Rep, t: &Rep| r_on(kind, s, t);
            let r12 = r(u, v)?.kron(&SMatrix::identity(w.dim()));
            let r23 = SMatrix::identity(u.dim()).kron(&r(v, w)?);
            let r13 = r13(u, v, w, &r(u, w)?);
            let diff = r12.mul(&r13).mul(&r23).sub(&r23.mul(&r13).mul(&r12));
            rep.expect(diff.is_zero(), || "braid relation fails".into());
        }
        Ok(rep)
    });
    let mut rep = Report::new(format!("braid relation sweep [{kind}] over {} label pairs", pairs.len()));
    for r in results {
        rep.absorb(r?);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatlab::catalog;

    fn lab(a: i64, b: i64) -> RepLabel {
        RepLabel::Int(a, b)
    }

    #[test]
    fn canonical_pair_gives_alexander_conway() {
        let r = universal_r_eval(&lab(1, 0), &lab(1, 0), RKind::Standard).unwrap();
        assert_eq!(r.matrix(), catalog::alexander_conway().unwrap().matrix());
    }

    /// Equal to the AC matrix at `q ↦ (−1)^{m2} q^{m1+m2}` up to the scalar
    /// `q^{(m1+m2)(m1−m2−1)}`, which is 1 exactly when `m1 = m2 + 1`.
    #[test]
    fn diagonal_labels_substitute_q() {
        let ac = catalog::alexander_conway().unwrap();
        for (m1, m2) in [(1, 0), (2, 1), (1, 1), (0, 1), (2, -1), (-1, 2)] {
            let s = Scalar::q_pow((m1 + m2) as i32);
            let sub = if m2 % 2 == 0 { s } else { -s };
            let want = ac.matrix().try_map(|x| x.subs(crate::scalars::Q, &sub)).unwrap();
            let got = universal_r_eval(&lab(m1, m2), &lab(m1, m2), RKind::Standard).unwrap();
            let factor = Scalar::q_pow(((m1 + m2) * (m1 - m2 - 1)) as i32);
            assert_eq!(got.matrix(), &want.scale(&factor), "[{m1},{m2}]");
            assert_eq!(got.matrix() == &want, m1 == m2 + 1, "[{m1},{m2}]");
        }
        let got = universal_r_eval(&lab(2, 1), &lab(2, 1), RKind::Standard).unwrap();
        assert_eq!(got.get(0, 0, 0, 0), &-Scalar::q_pow(3));
    }

    /// The central factor `q^{h⊗h}` dropped from the super R-matrix is `q` on the canonical pair.
    #[test]
    fn super_canonical_pair() {
        let r = universal_r_eval(&lab(1, 0), &lab(1, 0), RKind::Super).unwrap();
        let want = catalog::alexander_conway_super().unwrap();
        assert_eq!(&r.matrix().scale(&Scalar::q()), want.matrix());
        assert!(r.sybe_check().unwrap().ok());
    }

    #[test]
    fn canonical_triple_standard() {
        let rep = quasitriangularity_check(&lab(1, 0), &lab(1, 0), &lab(1, 0), RKind::Standard).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
    }

    #[test]
    fn mixed_triple_all_kinds() {
        for kind in RKind::ALL {
            let rep = quasitriangularity_check(&lab(1, 0), &lab(2, 1), &lab(1, 1), kind).unwrap();
            assert!(rep.ok(), "{kind}: {:?}", rep.failures);
        }
    }

    #[test]
    fn identity_r_fails_on_x_plus() {
        let a = rep_for(&lab(1, 0), RKind::Standard).unwrap();
        let set = qt_identities(&a, &a, &a, |x, y| Ok(SMatrix::identity(x.dim() * y.dim()))).unwrap();
        let rep = set.exact_report();
        assert!(rep.failures.iter().any(|f| f.contains("Δ′(X+)")), "{:?}", rep.failures);
    }

    #[test]
    fn non_integer_label_is_rejected() {
        let s = RepLabel::Sym(Scalar::named("la1").unwrap(), Scalar::named("la2").unwrap());
        assert_eq!(universal_r_eval(&s, &lab(1, 0), RKind::Standard).unwrap_err(), QgwError::NonIntegerLabel);
    }
}
