use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn monogen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monogen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("monogen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_theorem2_passes() {
    let out = monogen(&["verify-theorem2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["tool"], "monogen");
    assert_eq!(v["command"], "verify-theorem2");
    assert_eq!(v["verdict"], "PASS");
}

#[test]
fn audit_flags_identity_reading() {
    let out = monogen(&["audit-lemma1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"], "FLAGGED");
    let out = monogen(&["audit-lemma1", "--scope", "shift-2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(monogen(&["abs-index", "--a", "0", "--d", "4", "--coords", "0,0,0,1,1,0"]).status.code(), Some(2));
    assert_eq!(monogen(&["thue-search", "--bogus"]).status.code(), Some(2));
    assert_eq!(monogen(&["abs-index", "--a", "0", "--d", "1", "--coords", "1,2"]).status.code(), Some(2));
    assert_eq!(monogen(&["case-analysis", "--scope", "V"]).status.code(), Some(2));
}

#[test]
fn abs_index_of_a_known_generator() {
    let out = monogen(&["abs-index", "--a", "0", "--d", "1", "--coords", "0,0,0,1,1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["index"], "1");
    let out = monogen(&["abs-index", "--a", "-1", "--d", "1", "--coords", "(0,1,0,0,0,1)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_ne!(json(&out)["result"]["index"], "1");
}

#[test]
fn empty_generator_search_completes() {
    let out = monogen(&["gen-search", "--a", "0", "--d", "2", "--bound", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "COMPLETED");
    assert_eq!(v["result"]["generators"].as_array().map(Vec::len), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["case-analysis", "--scope", "I2", "--seed", "3"];
    let first = monogen(&args);
    let second = monogen(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn csv_to_file() {
    let path = scratch("theorem2.csv");
    let out = monogen(&["--format", "csv", "--out", path.to_str().unwrap(), "export-catalog", "--scope", "theorem2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# monogen "));
    assert!(lines.next().unwrap().starts_with("# parameters: "));
    let header = lines.next().unwrap();
    assert!(header.starts_with("entry,"));
    assert_eq!(lines.count(), 24);
}

#[test]
fn csv_needs_a_single_table() {
    let out = monogen(&["--format", "csv", "export-catalog", "--scope", "all"]);
    assert_eq!(out.status.code(), Some(2));
}
