use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{CheckDescriptor, CheckFn, Context, Evidence, Expected};
use crate::catalog::{gl11_dictionary, gl11_hopf, gl11_omega_hopf, gl11_presentation, uq_hopf, uq_omega_hopf, uq_presentation};
use crate::error::Result;
use crate::exterior::{
    action_agreement_check, covariance_check, gl_coaction_check, omega_build, ActingAlgebra, ActionTable,
};
use crate::frt::{
    a_r_presentation, duality_pairing_check, frt_families_check, l_omega, l_standard, m_omega, m_standard, qdet,
    qdet_check, quantum_matrix_hopf, super_det_check, theta_iso_check, with_inverses_2x2,
};
use crate::gtensor::Mode;
use crate::hopfcore::{casimir_central_check, check_hopf_axioms, hopf_map_check, superize, HopfCheckOptions, HopfData};
use crate::linalg::SMatrix;
use crate::ncalg::{overlap_check, tensor_presentation, Pres, Presentation};
use crate::report::Report;
use crate::reps::{
    quasitriangularity_identities, qybe_sweep, ribbon_identities, tensor_decompose, twist_identities,
    universal_r_eval, IdentitySet, RKind, RepLabel,
};
use crate::rmatlab::catalog::{
    alexander_conway, alexander_conway_super, gl_nm, gl_nm_super, gl_standard, identity, one_dim, r_omega,
    r_omega_super,
};
use crate::rmatlab::RMatrix;
use crate::scalars::{Scalar, Q};

pub const DEFAULT_SEED: u64 = 2024;

/// Labels at which the substitution rule and the ribbon structure are checked.
const DIAGONAL_LABELS: [(i64, i64); 4] = [(1, 0), (2, 1), (1, 1), (0, 1)];
const TRIPLE_SAMPLES: usize = 12;
const OVERLAP_PROBES: usize = 1000;

fn lab((a, b): (i64, i64)) -> RepLabel {
    RepLabel::Int(a, b)
}

fn labels_or(ctx: &Context, default: &[(i64, i64)]) -> Vec<RepLabel> {
    ctx.labels.clone().unwrap_or_else(|| default.iter().copied().map(lab).collect())
}

/// Nondegenerate labels with entries in `{0, 1, 2}`.
fn small_grid() -> Vec<RepLabel> {
    (0..3)
        .flat_map(|a| (0..3).map(move |b| (a, b)))
        .map(lab)
        .filter(|l| l.validate().is_ok())
        .collect()
}

/// The canonical triple followed by seeded samples from the label pool, or
/// every ordered triple when the pool is small.
fn triples(ctx: &Context, count: usize) -> Vec<[RepLabel; 3]> {
    let pool = ctx.labels.clone().unwrap_or_else(small_grid);
    let mut all: Vec<[RepLabel; 3]> = Vec::new();
    for a in &pool {
        for b in &pool {
            for c in &pool {
                all.push([a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    if all.len() <= count {
        return all;
    }
    let canonical = [lab((1, 0)), lab((1, 0)), lab((1, 0))];
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut out = vec![canonical.clone()];
    out.extend(all.choose_multiple(&mut rng, count).filter(|t| **t != canonical).take(count - 1).cloned());
    out
}

fn braid_set(r: &RMatrix) -> IdentitySet {
    let n = r.dim();
    let id = SMatrix::identity(n);
    let m = r.matrix();
    let r12 = m.kron(&id);
    let r23 = id.kron(m);
    let p23 = id.kron(&RMatrix::permutation(n));
    let r13 = p23.mul(&r12).mul(&p23);
    let mut set = IdentitySet::new(format!("braid relations of {}", r.name));
    set.push("R12 R13 R23 = R23 R13 R12", r12.mul(&r13).mul(&r23), r23.mul(&r13).mul(&r12));
    let pr = RMatrix::permutation(n).mul(m);
    let n2 = SMatrix::identity(n * n);
    let lhs = pr.sub(&n2.scale(&Scalar::q())).mul(&pr.add(&n2.scale(&Scalar::q_pow(-1))));
    set.push("(PR − q)(PR + q⁻¹) = 0", lhs, SMatrix::zeros(n * n, n * n));
    set
}

fn hecke_braid(r: RMatrix) -> Result<Evidence> {
    Ok(Evidence::from(r.qybe_check()).report(r.hecke_check()).report(r.hecke_index_check()).set(braid_set(&r)))
}

fn braid_ac(_: &Context) -> Result<Evidence> {
    hecke_braid(alexander_conway()?)
}

fn braid_omega(_: &Context) -> Result<Evidence> {
    hecke_braid(r_omega()?)
}

fn braid_gl2(_: &Context) -> Result<Evidence> {
    hecke_braid(gl_standard(2)?)
}

fn braid_gl3(_: &Context) -> Result<Evidence> {
    hecke_braid(gl_standard(3)?)
}

fn braid_super(_: &Context) -> Result<Evidence> {
    let mut ev = Evidence::from(alexander_conway_super()?.sybe_check()?);
    for (n, m) in [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)] {
        ev = ev.report(gl_nm_super(n, m)?.sybe_check()?);
    }
    Ok(ev)
}

fn user_rmatrix(ctx: &Context) -> Result<Evidence> {
    let r = ctx.rmatrix.as_ref().expect("registered only with a matrix");
    let braid = if r.is_super() { r.sybe_check()? } else { r.qybe_check() };
    Ok(Evidence::from(braid).detail(r.show()))
}

fn frt_standard(_: &Context) -> Result<Evidence> {
    let (lp, lm) = l_standard(&uq_presentation()?)?;
    let mut rep = frt_families_check(&alexander_conway()?, &lp, &lm)?;
    let count = rep.checked;
    rep.expect(count == 48, || format!("{count} entry identities instead of 48"));
    Ok(rep.into())
}

fn frt_omega(_: &Context) -> Result<Evidence> {
    let (lp, lm) = l_omega(&uq_presentation()?)?;
    Ok(frt_families_check(&r_omega()?, &lp, &lm)?.into())
}

fn frt_super(_: &Context) -> Result<Evidence> {
    let p = gl11_presentation()?;
    let (mp, mm) = m_standard(&p)?;
    let (op, om) = m_omega(&p)?;
    Ok(Evidence::from(frt_families_check(&alexander_conway_super()?, &mp, &mm)?)
        .report(frt_families_check(&r_omega_super()?, &op, &om)?))
}

fn frt_pairing(_: &Context) -> Result<Evidence> {
    let diag = |a: Scalar, b: Scalar| SMatrix::diag(&[a, b]);
    let g = diag(Scalar::one(), -Scalar::one());
    let k2 = diag(Scalar::one(), -Scalar::q());
    let p = uq_presentation()?;
    let (lp, lm) = l_standard(&p)?;
    let (a, _) = duality_pairing_check(&alexander_conway()?, &lp, &lm, &[("g", g.clone())], false)?;
    let (lp, lm) = l_omega(&p)?;
    let (b, _) = duality_pairing_check(&r_omega()?, &lp, &lm, &[("g", g), ("K2", k2)], false)?;
    let s = gl11_presentation()?;
    let (mp, mm) = m_standard(&s)?;
    let (c, _) = duality_pairing_check(&alexander_conway_super()?, &mp, &mm, &[], true)?;
    let (mp, mm) = m_omega(&s)?;
    let qn = diag(Scalar::one(), Scalar::q());
    let (d, _) = duality_pairing_check(&r_omega_super()?, &mp, &mm, &[("QN", qn)], true)?;
    Ok(Evidence::from(a).report(b).report(c).report(d))
}

fn qt_standard(ctx: &Context) -> Result<Evidence> {
    let mut ev = Evidence::default();
    let ts = triples(ctx, TRIPLE_SAMPLES);
    let names: Vec<String> = ts.iter().map(|[a, b, c]| format!("{a}{b}{c}")).collect();
    for [a, b, c] in &ts {
        ev = ev.set(quasitriangularity_identities([a, b, c], RKind::Standard)?);
    }
    Ok(ev.detail(format!("{} triples: {}", ts.len(), names.join(" "))))
}

fn qt_twisted_and_super(ctx: &Context) -> Result<Evidence> {
    let mut ev = Evidence::default();
    for kind in [RKind::Omega, RKind::Super, RKind::SuperOmega] {
        for [a, b, c] in triples(ctx, 3) {
            ev = ev.set(quasitriangularity_identities([&a, &b, &c], kind)?);
        }
    }
    Ok(ev)
}

fn qt_sweep(ctx: &Context) -> Result<Evidence> {
    let labels = labels_or(ctx, &[(1, 0), (0, 1), (1, 1), (2, 1), (-1, 2)]);
    Ok(qybe_sweep(&labels, RKind::Standard)?.into())
}

fn qt_decompose(_: &Context) -> Result<Evidence> {
    let sym = |a: &str, b: &str| -> Result<RepLabel> { Ok(RepLabel::Sym(Scalar::named(a)?, Scalar::named(b)?)) };
    let mut ev = Evidence::from(tensor_decompose(&sym("la1", "la2")?, &sym("mu1", "mu2")?)?.identities);
    for (x, y) in [((1, 0), (1, 0)), ((1, 0), (2, 1)), ((0, 1), (1, 1))] {
        ev = ev.set(tensor_decompose(&lab(x), &lab(y))?.identities);
    }
    Ok(ev)
}

fn recon_canonical(_: &Context) -> Result<Evidence> {
    let got = universal_r_eval(&lab((1, 0)), &lab((1, 0)), RKind::Standard)?;
    let mut set = IdentitySet::new("ρ⊗ρ(ℛ) on [1,0]⊗[1,0]");
    set.push("ρ⊗ρ(ℛ) = R_AC", got.matrix().clone(), alexander_conway()?.matrix().clone());
    Ok(Evidence::from(set).detail(got.show()))
}

/// `R_AC` with `q ↦ (−1)^{m2} q^{m1+m2}`.
fn substituted_ac(m1: i64, m2: i64) -> Result<SMatrix> {
    let s = Scalar::q_pow((m1 + m2) as i32);
    let sub = if m2 % 2 == 0 { s } else { -s };
    alexander_conway()?.matrix().try_map(|x| x.subs(Q, &sub))
}

fn recon_diagonal(ctx: &Context) -> Result<Evidence> {
    let mut set = IdentitySet::new("π⊗π(ℛ) against the substituted matrix");
    for l in labels_or(ctx, &DIAGONAL_LABELS) {
        let (m1, m2) = l.ints()?;
        let got = universal_r_eval(&l, &l, RKind::Standard)?;
        set.push(format!("{l}⊗{l}"), got.matrix().clone(), substituted_ac(m1, m2)?);
    }
    Ok(set.into())
}

fn recon_diagonal_normalized(ctx: &Context) -> Result<Evidence> {
    let mut set = IdentitySet::new("π⊗π(ℛ) against the rescaled substituted matrix");
    for l in labels_or(ctx, &DIAGONAL_LABELS) {
        let (m1, m2) = l.ints()?;
        let got = universal_r_eval(&l, &l, RKind::Standard)?;
        let factor = Scalar::q_pow(((m1 + m2) * (m1 - m2 - 1)) as i32);
        set.push(format!("{l}⊗{l}, factor {factor}"), got.matrix().clone(), substituted_ac(m1, m2)?.scale(&factor));
    }
    Ok(set.into())
}

fn recon_super(_: &Context) -> Result<Evidence> {
    let got = universal_r_eval(&lab((1, 0)), &lab((1, 0)), RKind::Super)?;
    let mut set = IdentitySet::new("super ℛ on [1,0]⊗[1,0]");
    set.push("q ℛ = R̲_AC", got.matrix().scale(&Scalar::q()), alexander_conway_super()?.matrix().clone());
    Ok(Evidence::from(set).report(got.sybe_check()?))
}

fn ribbon_labels(ctx: &Context) -> Result<Evidence> {
    let mut ev = Evidence::default();
    for l in labels_or(ctx, &DIAGONAL_LABELS) {
        ev = ev.set(ribbon_identities(&l)?);
    }
    Ok(ev)
}

fn superization_matches(bos: HopfData, sup: HopfData) -> Result<Report> {
    let s = superize(&bos)?;
    let phi = gl11_dictionary(&sup.pres, &s.pres)?;
    hopf_map_check(&sup, &s, &phi)
}

fn super_standard(_: &Context) -> Result<Evidence> {
    Ok(superization_matches(uq_hopf()?, gl11_hopf()?)?.into())
}

fn super_omega(_: &Context) -> Result<Evidence> {
    Ok(superization_matches(uq_omega_hopf()?, gl11_omega_hopf()?)?.into())
}

fn super_axioms(_: &Context) -> Result<Evidence> {
    let o = HopfCheckOptions::default();
    Ok(Evidence::from(check_hopf_axioms(&gl11_hopf()?, o)?).report(check_hopf_axioms(&gl11_omega_hopf()?, o)?))
}

fn theta_ac(_: &Context) -> Result<Evidence> {
    Ok(theta_iso_check(&alexander_conway()?, &[0, 1])?.into())
}

fn theta_omega(_: &Context) -> Result<Evidence> {
    Ok(theta_iso_check(&r_omega()?, &[0, 1])?.into())
}

fn theta_gl21(_: &Context) -> Result<Evidence> {
    Ok(theta_iso_check(&gl_nm(2, 1)?, &[0, 0, 1])?.into())
}

fn matrix_hopf(r: &RMatrix, mode: Mode) -> Result<HopfData> {
    let (pi, _) = with_inverses_2x2(&*a_r_presentation(r)?)?;
    quantum_matrix_hopf(&pi, mode)
}

fn det_ac(_: &Context) -> Result<Evidence> {
    let r = alexander_conway()?;
    Ok(qdet_check(&matrix_hopf(&r, Mode::Bosonic)?, Some(&r))?.into())
}

fn det_not_central(_: &Context) -> Result<Evidence> {
    let h = matrix_hopf(&alexander_conway()?, Mode::Bosonic)?;
    Ok(casimir_central_check(&h, &qdet(&h.pres)?)?.into())
}

fn det_super(_: &Context) -> Result<Evidence> {
    let a = super_det_check(&matrix_hopf(&alexander_conway_super()?, Mode::Super)?)?;
    let b = super_det_check(&matrix_hopf(&r_omega_super()?, Mode::Super)?)?;
    Ok(Evidence::from(a).report(b))
}

fn twist_triples(ctx: &Context) -> Result<Evidence> {
    let default = [[(1, 0), (1, 0), (1, 0)], [(1, 0), (2, 1), (1, 1)], [(0, 1), (2, 1), (1, 0)]];
    let ts: Vec<[RepLabel; 3]> = match &ctx.labels {
        Some(_) => triples(ctx, 3),
        None => default.iter().map(|t| t.map(lab)).collect(),
    };
    let mut ev = Evidence::default();
    for [a, b, c] in &ts {
        ev = ev.set(twist_identities(a, b, c)?);
    }
    Ok(ev)
}

fn twist_axioms(_: &Context) -> Result<Evidence> {
    let o = HopfCheckOptions::default();
    Ok(Evidence::from(check_hopf_axioms(&uq_omega_hopf()?, o)?).report(check_hopf_axioms(&gl11_omega_hopf()?, o)?))
}

fn exterior_suite(r: RMatrix) -> Result<Evidence> {
    let o = omega_build(&r)?;
    let agree_len = if o.n > 2 { 3 } else { 4 };
    Ok(Evidence::from(o.subalgebra_closure_check())
        .report(o.leibniz_check()?)
        .report(o.d_squared_check(4)?)
        .report(covariance_check(&ActionTable::for_algebra(ActingAlgebra::Bosonic, o.n)?, &o)?)
        .report(covariance_check(&ActionTable::for_algebra(ActingAlgebra::Super, o.n)?, &o)?)
        .report(gl_coaction_check(&o)?)
        .report(action_agreement_check(&o, agree_len)?))
}

fn exterior_gl2(_: &Context) -> Result<Evidence> {
    exterior_suite(gl_standard(2)?)
}

fn exterior_gl3(_: &Context) -> Result<Evidence> {
    exterior_suite(gl_standard(3)?)
}

fn exterior_ac(_: &Context) -> Result<Evidence> {
    exterior_suite(alexander_conway()?)
}

fn exterior_corrupted(_: &Context) -> Result<Evidence> {
    let o = omega_build(&gl_standard(2)?)?;
    let dx1 = o.pres.w(&["dx1"])?;
    let table = ActionTable::bosonic(2)?.with_entry(o.x(0), "X+", dx1)?;
    Ok(covariance_check(&table, &o)?.into())
}

fn overlap_report(p: &Presentation, seed: u64) -> Result<Report> {
    let o = overlap_check(p, OVERLAP_PROBES, seed)?;
    let mut rep = Report::new(p.name.clone());
    rep.checked = o.overlaps + o.probes;
    rep.failures = o.failures;
    Ok(rep)
}

fn engine_overlaps(ctx: &Context) -> Result<Evidence> {
    let mut ps: Vec<Pres> = vec![uq_presentation()?, gl11_presentation()?];
    let matrices = [
        alexander_conway()?,
        alexander_conway_super()?,
        r_omega()?,
        r_omega_super()?,
        gl_standard(2)?,
        gl_standard(3)?,
        gl_nm(2, 1)?,
        gl_nm_super(2, 1)?,
        identity(2)?,
        one_dim()?,
    ];
    for r in &matrices {
        ps.push(a_r_presentation(r)?);
    }
    for r in [alexander_conway()?, r_omega_super()?] {
        ps.push(with_inverses_2x2(&*a_r_presentation(&r)?)?.0);
    }
    for r in [gl_standard(2)?, gl_standard(3)?, alexander_conway()?, one_dim()?] {
        ps.push(omega_build(&r)?.pres);
    }
    let gl = a_r_presentation(&r_omega_super()?)?;
    ps.push(Pres::new(tensor_presentation(&gl, &omega_build(&gl_standard(2)?)?.pres, true)?));
    let mut ev = Evidence::default();
    for p in &ps {
        ev = ev.report(overlap_report(p, ctx.seed)?);
    }
    Ok(ev.detail(format!("{} presentations, {OVERLAP_PROBES} associativity probes each", ps.len())))
}

fn check(
    id: &'static str,
    criterion: u8,
    anchor: &'static str,
    params: &str,
    expected: Expected,
    run: CheckFn,
) -> CheckDescriptor {
    CheckDescriptor { id, anchor, criterion, params: params.to_string(), expected, run }
}

/// Every check, in id order.
pub fn registry(ctx: &Context) -> Vec<CheckDescriptor> {
    use Expected::{FailOfProperty as Neg, Pass};
    let mut v = vec![
        check("braid/ac", 1, "Alexander–Conway matrix: braid relation and Hecke condition", "R_AC", Pass, braid_ac),
        check("braid/omega", 1, "R_Ω: braid relation and Hecke condition", "R_Ω", Pass, braid_omega),
        check("braid/gl2", 1, "standard GL_q(2): braid relation and Hecke condition", "n=2", Pass, braid_gl2),
        check("braid/gl3", 1, "standard GL_q(3): braid relation and Hecke condition", "n=3", Pass, braid_gl3),
        check("braid/super", 1, "graded braid relation for R̲_AC and R̲_gl(n|m), n+m ≤ 4", "n,m ≥ 1", Pass, braid_super),
        check("frt/standard", 2, "l± operator matrices satisfy the RLL relations for R_AC", "48 identities", Pass, frt_standard),
        check("frt/omega", 2, "twisted l± operator matrices satisfy the RLL relations for R_Ω", "", Pass, frt_omega),
        check("frt/super", 2, "super m± operator matrices satisfy the graded RLL relations", "R̲_AC, R̲_Ω", Pass, frt_super),
        check("frt/pairing", 2, "duality pairings reproduce the generator matrices", "4 pairings", Pass, frt_pairing),
        check("quasitriangular/standard", 3, "Drinfeld axioms on sampled label triples", "labels in {0,1,2}²", Pass, qt_standard),
        check("quasitriangular/twisted-and-super", 3, "Drinfeld axioms for the twisted and super structures", "3 triples each", Pass, qt_twisted_and_super),
        check("quasitriangular/braid-sweep", 3, "braid relation of ℛ over ordered label pairs", "5 labels", Pass, qt_sweep),
        check("quasitriangular/decompose", 3, "tensor products split into two irreducibles", "symbolic and integer labels", Pass, qt_decompose),
        check("reconstruction/canonical", 4, "ρ⊗ρ(ℛ) on the canonical representation is the Alexander–Conway matrix", "[1,0]", Pass, recon_canonical),
        check("reconstruction/diagonal-labels", 4, "π⊗π(ℛ) equals the Alexander–Conway matrix at q ↦ (−1)^{m2} q^{m1+m2}", "[1,0],[2,1],[1,1],[0,1]", Pass, recon_diagonal),
        check("reconstruction/diagonal-labels-rescaled", 4, "π⊗π(ℛ) equals the substituted matrix times q^{(m1+m2)(m1−m2−1)}", "[1,0],[2,1],[1,1],[0,1]", Pass, recon_diagonal_normalized),
        check("reconstruction/super-canonical", 4, "super ℛ on the canonical pair is q⁻¹ R̲_AC", "[1,0]", Pass, recon_super),
        check("ribbon/labels", 5, "ribbon element, Drinfeld element and their closed forms", "[1,0],[2,1],[1,1],[0,1]", Pass, ribbon_labels),
        check("superization/standard", 6, "superization of U_q matches U_q gl(1|1) under the generator dictionary", "", Pass, super_standard),
        check("superization/twisted", 6, "superization of U_q^Ω matches U_q^Ω gl(1|1)", "", Pass, super_omega),
        check("superization/hopf-axioms", 6, "super Hopf axioms of U_q gl(1|1) and U_q^Ω gl(1|1)", "", Pass, super_axioms),
        check("theta/ac", 7, "θ identifies the superized ℤ2-extension of A(R_AC) with A(R̲_AC)", "grading (0,1)", Pass, theta_ac),
        check("theta/omega", 7, "θ for A(R_Ω)", "grading (0,1)", Pass, theta_omega),
        check("theta/gl21", 7, "θ for A(R_gl(2|1))", "grading (0,0,1)", Pass, theta_gl21),
        check("determinant/ac", 8, "𝒟 group-like with the commutation pattern, 𝒟² central, ρ±(𝒟²) = q^{±2}", "", Pass, det_ac),
        check("determinant/not-central", 8, "𝒟 itself is central", "", Neg, det_not_central),
        check("determinant/super", 8, "superdeterminants of GL_q(1|1) and GL_q^Ω(1|1) central and group-like", "", Pass, det_super),
        check("twist/triples", 9, "cocycle identities, Δ_Ω = χΔχ⁻¹ and ℛ_Ω = χ21ℛχ⁻¹ on representations", "3 triples", Pass, twist_triples),
        check("twist/hopf-axioms", 9, "Hopf axioms of the twisted presentations", "", Pass, twist_axioms),
        check("exterior/gl2", 10, "Ω_q for GL_q(2): d, covariance of both actions, GL_q^Ω(1|1) coaction", "words ≤ 4", Pass, exterior_gl2),
        check("exterior/gl3", 10, "Ω_q for GL_q(3): d, covariance of both actions, GL_q^Ω(1|1) coaction", "words ≤ 4", Pass, exterior_gl3),
        check("exterior/ac", 10, "Ω_q for R_AC: d, covariance of both actions, GL_q^Ω(1|1) coaction", "words ≤ 4", Pass, exterior_ac),
        check("exterior/corrupted-table", 10, "an action table without the q⁻¹ in x◁X⁺ is covariant", "GL_q(2)", Neg, exterior_corrupted),
        check("engine/overlaps", 11, "overlap resolution and associativity probes on every catalog presentation", "1000 probes", Pass, engine_overlaps),
    ];
    if ctx.rmatrix.is_some() {
        v.push(check("rmatrix/user", 1, "user-supplied matrix satisfies the (graded) braid relation", "file", Pass, user_rmatrix));
    }
    v.sort_by_key(|d| d.id);
    v
}
