use std::process::{Command, Output};

fn qgw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgw")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn without_timings(mut v: serde_json::Value) -> serde_json::Value {
    for o in v["outcomes"].as_array_mut().unwrap() {
        o["millis"] = 0.into();
    }
    v
}

#[test]
fn list_filters_the_catalog() {
    let o = qgw(&["list", "ribbon"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.starts_with("ribbon/labels")));
    let all = qgw(&["list"]);
    assert!(stdout(&all).lines().count() > 30);
    let none = qgw(&["list", "nosuch"]);
    assert!(none.status.success());
    assert!(stdout(&none).trim().is_empty());
}

#[test]
fn canonical_reconstruction_reports_the_matrix() {
    let o = qgw(&["run", "--suite", "reconstruction/canonical", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let out = &v["outcomes"][0];
    assert_eq!(out["verdict"], "pass");
    assert!(out["anchor"].as_str().unwrap().contains("Alexander–Conway"));
    let detail = out["detail"].as_str().unwrap();
    assert_eq!(detail.lines().count(), 4);
    assert!(detail.starts_with("[q, 0, 0, 0]"));
    assert!(out.get("steps").is_some() && out.get("millis").is_some());
}

#[test]
fn json_output_is_deterministic() {
    let args = ["run", "--suite", "quasitriangular/standard,twist", "--format", "json", "--seed", "7"];
    let a: serde_json::Value = serde_json::from_str(&stdout(&qgw(&args))).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&qgw(&args))).unwrap();
    assert_eq!(without_timings(a.clone()), without_timings(b));
    assert_eq!(a["seed"], 7);
}

#[test]
fn perturbed_rmatrix_fails_with_witness() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/perturbed.json");
    let o = qgw(&["run", "--rmatrix", path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first nonzero residual"));
}

#[test]
fn labels_and_spot_value_are_accepted() {
    let o = qgw(&["run", "--suite", "ribbon", "--labels", "1,0,3,1", "--q-spot", "0.7,0.2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn engine_and_usage_errors_exit_with_two() {
    assert_eq!(qgw(&["run", "--suite", "nosuch"]).status.code(), Some(2));
    assert_eq!(qgw(&["run", "--suite", "ribbon", "--labels", "1,0,3"]).status.code(), Some(2));
    assert_eq!(qgw(&["run", "--suite", "ribbon", "--labels", "0,0"]).status.code(), Some(2));
    assert_eq!(qgw(&["run", "--suite", "ribbon", "--q-spot", "x"]).status.code(), Some(2));
    assert_eq!(qgw(&["run", "--rmatrix", "/nonexistent.json"]).status.code(), Some(2));
}
