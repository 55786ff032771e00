use qgw_core::exterior::{
    action_agreement_check, covariance_check, gl_coaction_check, omega_build, ActingAlgebra, ActionTable,
};
use qgw_core::rmatlab::catalog::{alexander_conway, gl_standard};

#[test]
fn three_dimensional_plane() {
    let o = omega_build(&gl_standard(3).unwrap()).unwrap();
    assert!(o.subalgebra_closure_check().ok());
    let d2 = o.d_squared_check(4).unwrap();
    assert!(d2.ok(), "{:?}", d2.failures);
    assert_eq!(d2.checked, 1 + 6 + 36 + 216 + 1296);
    for alg in [ActingAlgebra::Bosonic, ActingAlgebra::Super] {
        let rep = covariance_check(&ActionTable::for_algebra(alg, 3).unwrap(), &o).unwrap();
        assert!(rep.ok(), "{alg:?}: {:?}", rep.failures);
    }
    let co = gl_coaction_check(&o).unwrap();
    assert!(co.ok(), "{:?}", co.failures);
    let agree = action_agreement_check(&o, 3).unwrap();
    assert!(agree.ok(), "{:?}", agree.failures);
}

#[test]
fn alexander_conway_plane_is_covariant() {
    let o = omega_build(&alexander_conway().unwrap()).unwrap();
    assert!(gl_coaction_check(&o).unwrap().ok());
    assert!(action_agreement_check(&o, 4).unwrap().ok());
}
