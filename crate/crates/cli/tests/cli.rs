mod common;

use std::fs;
use std::process::{Command, Output};

use hilbound::corpus;
use hilbound::instance::InstanceFile;
use hilbound::report::{run, Overrides};
use hilbound::search::generate;
use serde_json::Value;

fn hilbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilbound")).args(args).output().expect("binary runs")
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).expect("valid json")
}

#[test]
fn analyze_cusp() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("h4.json");
    let output = dir.path().join("report.json");
    fs::write(&input, corpus::cusp(false).to_json()).unwrap();
    let out = hilbound(&["analyze", "--input", input.to_str().unwrap(), "--output", output.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&fs::read(&output).unwrap());
    assert_eq!(report["invariants"]["e"], serde_json::json!([2, 1, 0]));
    assert_eq!(report["passed"], true);
    assert_eq!(report["version"], "1");
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.json");
    fs::write(&input, InstanceFile::monomial("bad", &[4, 6], &[4], None, 0).to_json()).unwrap();
    assert_eq!(hilbound(&["analyze", "--input", input.to_str().unwrap()]).status.code(), Some(2));
    fs::write(&input, "{ not json").unwrap();
    assert_eq!(hilbound(&["analyze", "--input", input.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(hilbound(&["analyze", "--input", "/nonexistent/x.json"]).status.code(), Some(2));
    assert_eq!(hilbound(&["reproduce", "t3", "--a", "2"]).status.code(), Some(2));
}

#[test]
fn reproduce_examples() {
    for args in [&["h4"][..], &["t3", "--a", "4"], &["rv-sharp", "--a", "5"], &["b2-lift", "--a", "3", "--d", "3"]] {
        let mut full = vec!["reproduce"];
        full.extend_from_slice(args);
        let out = hilbound(&full);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn search_is_clean_and_deterministic() {
    let run = || hilbound(&["search", "--count", "50", "--seed", "7"]);
    let (a, b) = (run(), run());
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let summary = json(&a.stdout);
    assert_eq!(summary["violations"], serde_json::json!([]));
    assert!(summary["equality"]["e1_module"].as_u64().unwrap() >= 1);

    let dir = tempfile::tempdir().unwrap();
    let out = hilbound(&["search", "--count", "50", "--seed", "7", "--output", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(fs::read(dir.path().join("summary.json")).unwrap(), a.stdout);
}

#[test]
fn genus_zero_search_is_regular() {
    let out = hilbound(&["search", "--count", "20", "--genus-max", "0", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out.stdout)["analyzed"], 20);
    for i in 0..20 {
        let instance = generate(3, i, 0);
        assert_eq!(instance.semigroup, vec![1]);
        let outcome = run(&instance, &Overrides::default()).unwrap();
        assert_eq!(outcome.invariants().e[1..], [0, 0], "{}", instance.id);
    }
}

#[test]
fn oracle_on_known_lengths() {
    // l(A/m^n) = 2n - 1 on the cusp; l(A/(t^3)^n) = 3n on k[[t]].
    assert_eq!(common::oracle::samuel_lengths(&corpus::cusp(false), 4), vec![1, 3, 5, 7]);
    assert_eq!(common::oracle::samuel_lengths(&corpus::curated()[14], 3), vec![3, 6, 9]);
}
