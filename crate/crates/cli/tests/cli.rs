//! End-to-end tests driving the compiled `ascentlab` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ascentlab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn build_chain(dir: &Path, n: u32, m: u32) -> PathBuf {
    let path = dir.join(format!("chain-{n}-{m}.json"));
    let out = run(&[
        "build",
        "cd-chain",
        "--n",
        &n.to_string(),
        "--m",
        &m.to_string(),
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    path
}

#[test]
fn build_reports_variable_and_constraint_counts() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["build", "cd-chain", "--n", "2", "--m", "2"])
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("16 variables, 45 constraints"));
    // With no --output the instance JSON goes to stdout.
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"num_vars\": 16") || stdout.contains("\"num_vars\":16"));
}

#[test]
fn build_dot_output_is_a_graph() {
    let out = run(&["build", "ms-scopes", "--n", "1", "--format", "dot"]);
    assert_eq!(code(&out), 0);
    let dot = String::from_utf8_lossy(&out.stdout);
    assert!(dot.starts_with("graph"));
    assert!(dot.contains("--"));
}

#[test]
fn ascend_expect_steps_gates_the_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let chain = build_chain(dir.path(), 2, 2);
    let chain = chain.to_str().unwrap();
    // The designated ascent on an m=2 chain takes 10(2^2 - 1) = 30 steps.
    let ok = run(&["ascend", "--instance", chain, "--expect-steps", "30", "--audit"]);
    assert_eq!(code(&ok), 0, "{}", stderr(&ok));
    assert!(stderr(&ok).contains("audit Yes"));
    let bad = run(&["ascend", "--instance", chain, "--expect-steps", "31"]);
    assert_eq!(code(&bad), 1);
    assert!(stderr(&bad).contains("expected 31 steps, got 30"));
}

#[test]
fn ascend_trace_is_jsonl_with_labels() {
    let dir = tempfile::tempdir().unwrap();
    let chain = build_chain(dir.path(), 2, 1);
    let trace = dir.path().join("trace.jsonl");
    let out = run(&[
        "ascend",
        "--instance",
        chain.to_str().unwrap(),
        "--output",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&trace).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1 + 10); // header + 10 steps for m = 1
    let header: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(header["steps"], 10);
    assert_eq!(header["end"], "11111001");
    let first: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(first["label"], serde_json::json!([1, "1"]));
}

#[test]
fn seeded_random_rule_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let chain = build_chain(dir.path(), 3, 3);
    let mut traces = Vec::new();
    for name in ["a.jsonl", "b.jsonl"] {
        let path = dir.path().join(name);
        let out = run(&[
            "ascend",
            "--instance",
            chain.to_str().unwrap(),
            "--rule",
            "random",
            "--seed",
            "54321",
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
        traces.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(traces[0], traces[1]);
}

#[test]
fn ascend_respects_the_step_budget() {
    let dir = tempfile::tempdir().unwrap();
    let chain = build_chain(dir.path(), 2, 2);
    let out = run(&[
        "ascend",
        "--instance",
        chain.to_str().unwrap(),
        "--max-steps",
        "5",
    ]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("step budget"));
}

#[test]
fn verify_decomposition_exit_codes() {
    for (cert, expected) in [
        ("prop3", 0),
        ("prop2", 1),
        ("prop2-repaired", 0),
        ("prop1", 0),
    ] {
        let out = run(&["verify", "decomposition", "--cert", cert]);
        assert_eq!(code(&out), expected, "cert {cert}: {}", stderr(&out));
    }
}

#[test]
fn verify_minor_exit_codes() {
    for (cert, expected) in [
        ("prop3-k4", 0),
        ("prop2-k5", 1),
        ("prop2-k5-extended", 0),
        ("prop1-k5", 0),
    ] {
        let out = run(&["verify", "minor", "--cert", cert]);
        assert_eq!(code(&out), expected, "cert {cert}: {}", stderr(&out));
    }
    let out = run(&["verify", "minor", "--cert", "prop2-k5"]);
    let report = String::from_utf8_lossy(&out.stdout).into_owned();
    assert!(report.contains("branch sets 2 and 4 have no connecting edge"));
}

#[test]
fn verify_pathwidth_builtins() {
    let out = run(&["verify", "pathwidth", "--builtin", "cd-gadget", "--expect", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3");
    let out = run(&["verify", "pathwidth", "--builtin", "ms-two-gadget", "--expect", "3"]);
    assert_eq!(code(&out), 1); // actual width is 4
}

#[test]
fn verify_explore_unique_path_and_budget() {
    let out = run(&["verify", "explore", "--n", "2", "--m", "2"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let report: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("JSON report on stdout");
    assert_eq!(report["unique_maximal_path"], true);
    assert_eq!(report["path_length"], 30);
    let out = run(&["verify", "explore", "--n", "2", "--m", "2", "--budget", "5"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn verify_peaks_against_reference_table_fails_honestly() {
    // The shipped reference peak table disagrees with brute force, so the
    // comparison must report a failure rather than a pass.
    let out = run(&["verify", "peaks", "--n", "3", "--k", "2"]);
    assert_eq!(code(&out), 1);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["pass"], false);
}

#[test]
fn verify_delta_table_fails_honestly() {
    let out = run(&["verify", "delta-table", "--n", "4", "--k", "2"]);
    assert_eq!(code(&out), 1);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["pass"], false);
    assert_eq!(report["m_k"], 80);
}

#[test]
fn usage_errors_exit_with_code_two() {
    let out = run(&["build", "cd-chain", "--n", "2"]); // missing --m
    assert_eq!(code(&out), 2);
    let out = run(&["verify", "pathwidth", "--builtin", "nonsense"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn out_dir_env_var_resolves_relative_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args([
            "build",
            "ms-scopes",
            "--n",
            "1",
            "--output",
            "nested/ms.json",
        ])
        .env("ASCENTLAB_OUT", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(dir.path().join("nested/ms.json").is_file());
}
