//! Integration tests of the compiled binary: schemas, exit codes, output
//! routing, and byte-level determinism.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_liecoh"))
}

fn run_stdin(job: &str, extra_args: &[&str]) -> Output {
    let mut child = bin()
        .args(extra_args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .as_mut()
        .expect("stdin handle")
        .write_all(job.as_bytes())
        .expect("job written");
    child.wait_with_output().expect("binary finishes")
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("liecoh-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn cg_example_matches_documented_output() {
    let out = run_stdin(r#"{"task":"cg","inputs":{"d":3,"e":2}}"#, &[]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report, serde_json::json!({ "dims": [2, 4] }));
}

#[test]
fn malformed_json_exits_2() {
    let out = run_stdin("this is not json", &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_task_exits_2() {
    let out = run_stdin(r#"{"task":"no-such-task"}"#, &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_stdin_exits_2_with_usage_hint() {
    let out = run_stdin("", &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--job"), "stderr should point at --job: {err}");
}

#[test]
fn failing_invariant_exits_1() {
    // A bracket table violating the Jacobi identity.
    let job = r#"{"task":"check","algebras":[
        {"dim":3,"brackets":[[0,1,[0,0,1]],[0,2,[0,0,1]],[1,2,[0,1,0]]]}
    ]}"#;
    let out = run_stdin(job, &[]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["all_pass"], serde_json::json!(false));
}

#[test]
fn default_check_passes_over_builtin_algebras() {
    let out = run_stdin(r#"{"task":"check"}"#, &[]);
    assert!(out.status.success());
}

#[test]
fn inline_cocycle_verify_command() {
    let out = bin()
        .args(["cocycle", "verify"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["all_pass"], serde_json::json!(true));
    assert_eq!(
        report["cocycle"]["matrices"].as_array().map(Vec::len),
        Some(4)
    );
}

#[test]
fn unknown_inline_command_exits_2() {
    let out = bin().args(["frobnicate"]).output().expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn job_file_and_out_flag() {
    let job_path = temp_path("job.json");
    let out_path = temp_path("report.json");
    std::fs::write(&job_path, r#"{"task":"cg","inputs":{"d":4,"e":3}}"#).unwrap();
    let out = bin()
        .args(["--job", job_path.to_str().unwrap(), "--out", out_path.to_str().unwrap()])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert!(out.stdout.is_empty(), "report should go to the file");
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report, serde_json::json!({ "dims": [2, 4, 6] }));
    std::fs::remove_file(job_path).ok();
    std::fs::remove_file(out_path).ok();
}

#[test]
fn job_output_path_is_honored_and_out_flag_overrides() {
    let inner_path = temp_path("inner.json");
    let override_path = temp_path("override.json");
    let job = format!(
        r#"{{"task":"cg","inputs":{{"d":2,"e":2}},"output_path":{:?}}}"#,
        inner_path.to_str().unwrap()
    );

    let out = run_stdin(&job, &[]);
    assert!(out.status.success());
    assert!(inner_path.exists(), "output_path target should be written");

    let out = run_stdin(&job, &["--out", override_path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(override_path.exists(), "--out target should be written");

    let a = std::fs::read(&inner_path).unwrap();
    let b = std::fs::read(&override_path).unwrap();
    assert_eq!(a, b, "same job, same bytes regardless of destination");
    std::fs::remove_file(inner_path).ok();
    std::fs::remove_file(override_path).ok();
}

#[test]
fn missing_job_file_exits_2() {
    let out = bin()
        .args(["--job", "/nonexistent/job.json"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_across_runs_and_thread_counts() {
    let job = r#"{"task":"blocks","algebra":"takiff-sl2","simples":[
        {"d":1,"point":0},{"d":2,"point":0},{"d":3,"point":0},
        {"d":4,"point":0},{"d":5,"point":0},{"d":6,"point":0}
    ]}"#;
    let first = run_stdin(job, &["--threads", "1"]);
    let second = run_stdin(job, &["--threads", "4"]);
    let third = run_stdin(job, &[]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, third.stdout);
    let report: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(
        report["blocks"],
        serde_json::json!([
            ["V(1)@0", "V(3)@0", "V(5)@0"],
            ["V(2)@0", "V(4)@0", "V(6)@0"]
        ])
    );
}

#[test]
fn demo_scenario_runs_end_to_end() {
    let out = run_stdin(r#"{"task":"demo-takiff"}"#, &["--verbose"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["all_pass"], serde_json::json!(true));
    assert_eq!(report["structure"]["k_dim"], serde_json::json!(3));
    assert_eq!(
        report["blocks"],
        serde_json::json!([
            ["V(1)@0", "V(3)@0", "V(5)@0"],
            ["V(2)@0", "V(4)@0", "V(6)@0"]
        ])
    );
    // --verbose notes go to stderr, never into the report stream.
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("demo-takiff"));
}

#[test]
fn flat_and_wrapped_job_forms_agree() {
    let wrapped = run_stdin(r#"{"task":"ext","inputs":{"algebra":"sl2","v":{"simple":2},"w":{"simple":2}}}"#, &[]);
    let flat = run_stdin(r#"{"task":"ext","algebra":"sl2","v":{"simple":2},"w":{"simple":2}}"#, &[]);
    assert!(wrapped.status.success());
    assert_eq!(wrapped.stdout, flat.stdout);
}
