use qgw_core::reps::{
    qybe_sweep, quasitriangularity_identities, ribbon_identities, sample_q, tensor_decompose, twist_identities,
    RKind, RepLabel,
};

fn lab(a: i64, b: i64) -> RepLabel {
    RepLabel::Int(a, b)
}

const SWEEP: [(i64, i64); 5] = [(1, 0), (0, 1), (1, 1), (2, 1), (-1, 2)];

#[test]
fn braid_relation_over_label_pairs() {
    let labels: Vec<RepLabel> = SWEEP.iter().map(|&(a, b)| lab(a, b)).collect();
    let rep = qybe_sweep(&labels, RKind::Standard).unwrap();
    assert!(rep.ok(), "{:?}", rep.failures);
    assert_eq!(rep.checked, 50);
}

#[test]
fn omega_structure_on_mixed_labels() {
    let set = quasitriangularity_identities([&lab(1, 0), &lab(2, 1), &lab(1, 1)], RKind::Omega).unwrap();
    assert!(set.exact_report().ok());
}

#[test]
fn exact_passes_agree_numerically() {
    let qs = sample_q(2024, 3);
    let mut sets = vec![
        quasitriangularity_identities([&lab(1, 0), &lab(2, 1), &lab(1, 1)], RKind::Standard).unwrap(),
        quasitriangularity_identities([&lab(1, 0), &lab(1, 0), &lab(0, 1)], RKind::Super).unwrap(),
        twist_identities(&lab(1, 0), &lab(2, 1), &lab(0, 1)).unwrap(),
        tensor_decompose(&lab(1, 0), &lab(2, 1)).unwrap().identities,
    ];
    for (a, b) in [(1, 0), (2, 1), (1, 1), (0, 1)] {
        sets.push(ribbon_identities(&lab(a, b)).unwrap());
    }
    for set in sets {
        let exact = set.exact_report();
        assert!(exact.ok(), "{}: {:?}", set.name, exact.failures);
        let numeric = set.numeric_report(&qs, 1e-9);
        assert!(numeric.ok(), "{}: {:?}", set.name, numeric.failures);
    }
}
