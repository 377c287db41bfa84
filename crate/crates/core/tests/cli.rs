//! End-to-end tests of the command-line interface: flag grammar, output
//! formats, exit codes, and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn grouplaw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grouplaw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("grouplaw-test-{}-{name}", std::process::id()))
}

#[test]
fn add_inverse_pair_prints_infinity() {
    let out = grouplaw(&[
        "add", "--p", "7", "--a", "1", "--b", "1", "--point", "0,1", "--point", "0,6",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "O\n");
}

#[test]
fn add_chord_case() {
    let out = grouplaw(&[
        "add", "--p", "7", "--a", "1", "--b", "1", "--point", "0,1", "--point", "2,5",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2,2\n");
}

#[test]
fn add_accepts_infinity_operand() {
    let out = grouplaw(&[
        "add", "--p", "7", "--a", "1", "--b", "1", "--point", "O", "--point", "2,5",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2,5\n");
}

#[test]
fn points_lists_deterministic_order() {
    let out = grouplaw(&["points", "--p", "7", "--a", "1", "--b", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "O\n0,1\n0,6\n2,2\n2,5\n");
}

#[test]
fn mul_examples() {
    let out = grouplaw(&[
        "mul", "--p", "7", "--a", "1", "--b", "1", "--point", "0,1", "--scalar", "2",
    ]);
    assert_eq!(stdout(&out), "2,5\n");
    let out = grouplaw(&[
        "mul", "--p", "7", "--a", "1", "--b", "1", "--point", "0,1", "--scalar", "5",
    ]);
    assert_eq!(stdout(&out), "O\n");
    let out = grouplaw(&[
        "mul", "--p", "7", "--a", "1", "--b", "1", "--point", "0,1", "--scalar", "0",
    ]);
    assert_eq!(stdout(&out), "O\n");
}

#[test]
fn prove_single_lemma_writes_schema_compliant_json() {
    let path = temp_path("report.json");
    let out = grouplaw(&[
        "prove",
        "--lemma",
        "PmbSimplification",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).expect("report written");
    std::fs::remove_file(&path).ok();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["tool"], "grouplaw");
    let checks = value["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["id"], "PmbSimplification");
    assert_eq!(checks[0]["status"], "pass");
    assert_eq!(checks[0]["residual_terms"], 0);
    assert_eq!(checks[0]["residual_text"], "0");
    assert!(checks[0]["elapsed_ms"].is_u64());
    assert_eq!(value["summary"]["pass"], 1);
    assert_eq!(value["summary"]["fail"], 0);
    assert_eq!(value["summary"]["flagged"], 0);

    // round-trip through the typed representation
    let parsed: grouplaw::prover::JsonReport = serde_json::from_str(&text).unwrap();
    let reserialized = serde_json::to_string(&parsed).unwrap();
    let reparsed: grouplaw::prover::JsonReport = serde_json::from_str(&reserialized).unwrap();
    assert_eq!(parsed, reparsed);
}

#[test]
fn prove_full_run_passes_and_reports() {
    let path = temp_path("full-report.json");
    let out = grouplaw(&["prove", "--json", path.to_str().unwrap()]);
    assert!(out.status.success(), "flagged audit must not fail the run");
    let text = stdout(&out);
    for id in [
        "Assoc3Generic",
        "AssocDouble",
        "AssocQuad",
        "NegDistributes",
        "PmbSimplification",
        "DoubleMinusA",
        "AddMinusB",
        "Claim5Square",
        "Claim5Factorization",
        "TranscriptionAudit",
    ] {
        assert!(text.contains(id), "missing check line for {id}");
    }
    assert!(text.contains("summary: 9 pass, 0 fail, 1 flagged"));

    let report: grouplaw::prover::JsonReport =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(report.checks.len(), 10);
    let audit = report.checks.last().unwrap();
    assert_eq!(audit.id, "TranscriptionAudit");
    assert_eq!(audit.status, "flagged");
    assert!(audit.residual_terms > 0);
    assert_ne!(audit.residual_text, "0");
    for check in &report.checks[..9] {
        assert_eq!(check.status, "pass", "{}", check.id);
        assert_eq!(check.residual_text, "0");
    }
}

#[test]
fn prove_audit_prints_diff_lines() {
    let out = grouplaw(&["prove", "--lemma", "TranscriptionAudit", "--audit"]);
    assert!(out.status.success(), "flagged audit still exits 0");
    let text = stdout(&out);
    assert!(text.contains("TranscriptionAudit: flagged"));
    assert!(text.contains("printed-minus-derived delta"));
}

#[test]
fn unknown_lemma_is_usage_error() {
    let out = grouplaw(&["prove", "--lemma", "NoSuchLemma"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = grouplaw(&["points", "--p", "7", "--a", "1", "--b", "1", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_inputs_are_usage_errors() {
    // composite modulus
    let out = grouplaw(&["points", "--p", "9", "--a", "1", "--b", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // singular curve
    let out = grouplaw(&["points", "--p", "5", "--a", "0", "--b", "0"]);
    assert_eq!(out.status.code(), Some(2));
    // point not on the curve
    let out = grouplaw(&[
        "add", "--p", "7", "--a", "1", "--b", "1", "--point", "1,1", "--point", "0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // malformed point syntax
    let out = grouplaw(&[
        "add", "--p", "7", "--a", "1", "--b", "1", "--point", "0;1", "--point", "0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn axioms_exhaustive_slice() {
    let out = grouplaw(&["axioms", "--p", "7", "--a", "1", "--b", "1", "--exhaustive"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["total_failures"], 0);
    assert_eq!(report["points"], 5);
    let assoc = report["properties"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["property"] == "Associativity")
        .unwrap();
    assert_eq!(assoc["checked"], 125);
}

#[test]
fn axioms_sampled_mode() {
    let out = grouplaw(&[
        "axioms", "--p", "101", "--a", "2", "--b", "3", "--trials", "64", "--seed", "9",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["total_failures"], 0);
}

#[test]
fn random_runs_are_byte_identical() {
    let args = ["random", "--trials", "200", "--bits", "31", "--seed", "7"];
    let first = grouplaw(&args);
    let second = grouplaw(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn sweep_guard_is_input_error() {
    let out = grouplaw(&["sweep", "--max-p", "2000"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_small_range_passes() {
    let out = grouplaw(&["sweep", "--max-p", "5"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["curves"], 20);
    assert_eq!(report["total_failures"], 0);
}
