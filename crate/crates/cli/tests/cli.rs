//! End-to-end checks of the binary: exit codes, JSON shapes, and
//! determinism, driven through real process invocations.

use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_wginv");

fn tmp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("wginv-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn s(re: &str) -> Value {
    json!({ "re": re, "im": "0" })
}

fn mat(rows: &[&[&str]]) -> Value {
    json!({
        "n": rows.len(),
        "entries": rows
            .iter()
            .map(|r| r.iter().map(|e| s(e)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn pair_file(name: &str, a: &Value, w: &Value) -> PathBuf {
    tmp(name, &json!({ "a": a, "w": w }).to_string())
}

fn identity2() -> Value {
    mat(&[&["1", "0"], &["0", "1"]])
}

#[test]
fn classify_identity_pair_reports_all_classes() {
    let input = pair_file("classify.json", &identity2(), &identity2());
    let out = run(&["classify", input.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    for kind in ["w-group", "w-drazin", "w-ep", "gen-w-ep", "w-star-dmp"] {
        assert_eq!(v[kind]["exists"], true, "{kind}");
    }
    assert_eq!(v["w-star-dmp"]["min_power"], 1);
    assert_eq!(v["w-group"]["x"], identity2());
}

#[test]
fn inverse_reports_nonexistence_with_exit_1() {
    let shift = mat(&[&["0", "1"], &["0", "0"]]);
    let input = pair_file("shift.json", &shift, &identity2());
    let out = run(&["inverse", input.to_str().unwrap(), "--kind", "w-group"]);
    assert_eq!(code(&out), 1);
    let v = stdout_json(&out);
    assert_eq!(v["exists"], false);
    assert!(v.get("x").is_none());
}

#[test]
fn inverse_mp_accepts_bare_matrix() {
    let input = tmp("bare.json", &mat(&[&["1", "1"], &["0", "0"]]).to_string());
    let out = run(&["inverse", input.to_str().unwrap(), "--kind", "mp"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["x"], mat(&[&["1/2", "0"], &["1/2", "0"]]));
}

#[test]
fn decompose_splits_the_nilpotent_shift() {
    let shift = mat(&[&["0", "1"], &["0", "0"]]);
    let input = pair_file("decompose.json", &shift, &identity2());
    let out = run(&["decompose", input.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["exists"], true);
    assert_eq!(v["x"], mat(&[&["0", "0"], &["0", "0"]]));
    assert_eq!(v["y"], shift);
    assert_eq!(v["nil_degree"], 2);
}

#[test]
fn project_rejects_pairs_outside_the_eventual_class() {
    let idem = mat(&[&["1", "1"], &["0", "0"]]);
    let input = pair_file("project.json", &idem, &identity2());
    let out = run(&["project", input.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["exists"], false);
}

#[test]
fn check_emits_certificates_with_exit_by_consistency() {
    let input = pair_file("check.json", &identity2(), &identity2());
    let out = run(&["check", input.to_str().unwrap(), "--theorem", "T2.1"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["theorem"], "T2.1");
    assert_eq!(v["consistent"], true);
    assert!(v["clauses"].as_array().unwrap().len() >= 3);
}

#[test]
fn unknown_theorem_is_an_input_error() {
    let input = pair_file("badid.json", &identity2(), &identity2());
    let out = run(&["check", input.to_str().unwrap(), "--theorem", "T9.9"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown theorem"));
}

#[test]
fn malformed_input_is_an_input_error() {
    let input = tmp("garbage.json", "not json at all");
    let out = run(&["classify", input.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn mismatched_pair_dimensions_are_an_input_error() {
    let input = tmp(
        "mismatch.json",
        &json!({ "a": identity2(), "w": mat(&[&["1"]]) }).to_string(),
    );
    let out = run(&["classify", input.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn generate_is_byte_deterministic() {
    let args = ["generate", "--seed", "7", "--count", "6"];
    let one = run(&args);
    let two = run(&args);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, two.stdout);
    let v = stdout_json(&one);
    assert_eq!(v.as_array().unwrap().len(), 6);
}

#[test]
fn generate_family_emits_labeled_fixed_instances() {
    let out = run(&[
        "generate",
        "--seed",
        "3",
        "--family",
        "jordan-nilpotent",
        "--n",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    let entry = &v.as_array().unwrap()[0];
    assert_eq!(entry["label"], "gen-w-ep");
    assert_eq!(entry["pair"]["a"], mat(&[&["0", "1"], &["0", "0"]]));
    assert_eq!(entry["spec"]["family"], "jordan-nilpotent");
}

#[test]
fn generate_rejects_zero_dimension() {
    let out = run(&[
        "generate",
        "--seed",
        "1",
        "--family",
        "diagonal-w-ep",
        "--n",
        "0",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn suite_consumes_generated_corpus_and_output_flag() {
    let corpus_path = std::env::temp_dir().join(format!("wginv-cli-{}-corpus.json", std::process::id()));
    let gen = run(&[
        "generate",
        "--seed",
        "11",
        "--count",
        "6",
        "-o",
        corpus_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&gen), 0);
    assert!(gen.stdout.is_empty());

    let out = run(&["suite", corpus_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["instances"], 6);
    assert_eq!(v["inconsistencies"].as_array().unwrap().len(), 0);
    let tallies = v["tallies"].as_array().unwrap();
    assert_eq!(tallies.len(), 22);
    assert!(tallies.iter().all(|t| t["consistent"] == 6 && t["inconsistent"] == 0));
}
