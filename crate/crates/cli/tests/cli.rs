// End-to-end runs of the `homlab` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn homlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn count_examples() {
    let dir = tempfile::tempdir().unwrap();
    let k11 = write(dir.path(), "k11.txt", "bigraph 1 1\n0 0\n");
    let p3 = write(dir.path(), "p3.txt", "graph 3\n0 1\n1 2\n");
    let o = homlab(&["count", "--instance", "@p4", "--mode", "bis"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "8"));
    let o = homlab(&["count", "--target", "@case1", "--instance", &k11, "--mode", "fixcol"]);
    assert_eq!(stdout(&o), "27");
    let o = homlab(&["count", "--target", "@h_is", "--instance", &p3, "--mode", "col"]);
    assert_eq!(stdout(&o), "5");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "bigraph 2 2\n0 7\n");
    assert_eq!(homlab(&["count", "--instance", &bad, "--mode", "bis"]).status.code(), Some(2));
    // kind mismatch: a graph where a bigraph is needed
    assert_eq!(homlab(&["count", "--target", "@k3", "--instance", "@p4", "--mode", "fixcol"]).status.code(), Some(3));
    assert_eq!(homlab(&["count", "--mode", "nonsense", "--instance", "@p4"]).status.code(), Some(3));
    // complete bipartite target is trivial
    let k22 = write(dir.path(), "k22.txt", "bigraph 2 2\n0 0\n0 1\n1 0\n1 1\n");
    let o = homlab(&["analyze", "--target", &k22]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn analyze_reports_refinement() {
    let dir = tempfile::tempdir().unwrap();
    let k11 = write(dir.path(), "k11.txt", "bigraph 1 1\n0 0\n");
    let o = homlab(&["analyze", "--target", "@case1", "--gamma-graph", &k11]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["refinement"]["gamma"], "1/2");
    assert_eq!(v["refinement"]["winners"][0]["left"], serde_json::json!([0, 1, 2]));
    let o = homlab(&["analyze", "--target", "@coexistence", "--gamma-graph", "none"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dominant"].as_array().unwrap().len(), 4);
    assert!(v["refinement"].is_null());
}

#[test]
fn classify_stages() {
    for (name, bound, stage) in [("@case1", "1", "CaseI"), ("@coexistence", "3", "CaseII_Conjectured"), ("@case3", "1", "CaseIII")] {
        let o = homlab(&["classify", "--target", name, "--bound", bound]);
        assert!(o.status.success(), "{name}");
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["stage"], stage, "{name}");
    }
    // with two right vertices allowed, K_{1,2} already lifts a middle biclique above both extremal ones
    let o = homlab(&["classify", "--target", "@case3", "--bound", "2"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["stage"], "CaseI");
    assert_eq!(v["gamma"], "bigraph 1 2\n0 0\n0 1\n");
    assert_eq!(v["descent"]["graph"].as_str().unwrap().lines().next(), Some("bigraph 3 9"));
    let o = homlab(&["classify", "--target", "@coexistence"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exponent_c"], "1/2");
}

#[test]
fn output_is_deterministic_with_sorted_keys() {
    let a = homlab(&["analyze", "--target", "@case3", "--gamma-graph", "@p4"]);
    let b = homlab(&["analyze", "--target", "@case3", "--gamma-graph", "@p4", "--jobs", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let keys: Vec<&str> = text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim().split('"').nth(1).unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn distinguish_and_select() {
    let dir = tempfile::tempdir().unwrap();
    let k12 = write(dir.path(), "k12.txt", "bigraph 1 2\n0 0\n0 1\n");
    let k21 = write(dir.path(), "k21.txt", "bigraph 2 1\n0 0\n1 0\n");
    let o = homlab(&["distinguish", &k12, &k21]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_ne!(v["counts"][0], v["counts"][1]);
    let o = homlab(&["distinguish", &k12, &k21, "@p4"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["winner"].as_u64().unwrap() < 3);
    assert_eq!(homlab(&["distinguish", "@p4", "@p4"]).status.code(), Some(4));
}

#[test]
fn gadget_commands() {
    let dir = tempfile::tempdir().unwrap();
    let k11 = write(dir.path(), "k11.txt", "bigraph 1 1\n0 0\n");
    let o = homlab(&["gadget", "kab", "--target", "@coexistence", "--gprime", &k11, "--gamma", &k11, "--a", "2", "--b", "2", "--copies-gamma", "1"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["all_match"], true);
    let o = homlab(&["gadget", "bis", "--target", "@p4", "--gprime", "@p4", "--a", "2", "--b", "2"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["independent_sets"], "8");
    let o = homlab(&["gadget", "col", "--target", "@k3", "--gprime", &k11, "--a-size", "2", "--b-size", "1"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["phases"].as_array().unwrap().len(), 6);
    let o = homlab(&["gadget", "dirichlet", "--alpha", "1/3", "--n", "3"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["q"], 3);
    let o = homlab(&["gadget", "params", "--target", "@case1", "--gamma", &k11, "--n", "4"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["q"].clone(), v["a"].clone(), v["b"].clone()), (1.into(), "32".into(), "40".into()));
    let o = homlab(&["gadget", "bracket", "--target", "@case1", "--gamma", &k11, "--n", "4"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lower_vacuous"], true);
    // over the vertex ceiling
    let o = homlab(&["gadget", "kab", "--target", "@p4", "--gprime", &k11, "--a", "12", "--b", "12"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_filter_and_corruption() {
    let o = homlab(&["verify-paper", "--filter", "case1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("case1-figure"));
    assert!(!out.contains("case3-figure"));
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 1);

    let dir = tempfile::tempdir().unwrap();
    for (name, text) in homlab_core::fixtures::FIXTURES {
        write(dir.path(), &format!("{name}.txt"), text);
    }
    let ok = homlab(&["verify-paper", "--filter", "figure", "--fixtures-dir", dir.path().to_str().unwrap()]);
    assert!(ok.status.success());
    write(dir.path(), "case1.txt", "bigraph 9 9\n0 0\n0 1\n");
    let o = homlab(&["verify-paper", "--filter", "figure", "--fixtures-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL  1 case1-figure"));
    assert!(out.contains("failed: case1-figure"));
}
