//! End-to-end tests for the `skein` binary: exit codes, frozen output
//! values, report determinism, and resource-guard behavior.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(args)
        .output()
        .expect("spawn skein")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

/// Writes `content` under a test-unique name and returns the path.
fn scratch(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("skein-cli-{}-{}", std::process::id(), name));
    std::fs::write(&path, content).expect("write scratch file");
    path
}

#[test]
fn bracket_reduces_a_trefoil_to_the_frozen_value() {
    let path = scratch(
        "trefoil.txt",
        "surface 0\ncup 0\ncup 2\nover 1\nover 1\nover 1\ncap 2\ncap 0\n",
    );
    let out = run(&["bracket", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "-A^9 + A + A^-3 + A^-7 * {}\n");
    let _ = std::fs::remove_file(path);
}

#[test]
fn bracket_reports_parse_errors_with_positions() {
    let path = scratch("bad.txt", "surface 0\ncup 0\nglue 3\ncap 0\n");
    let out = run(&["bracket", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.starts_with("error: "), "got: {}", err);
    assert!(err.contains("line 3"), "got: {}", err);
    let _ = std::fs::remove_file(path);
}

#[test]
fn bracket_rejects_missing_files() {
    let out = run(&["bracket", "/nonexistent/skein-input.txt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cannot read"));
}

#[test]
fn bracket_guards_against_oversized_diagrams() {
    let mut word = String::from("surface 0\ncup 0\n");
    for _ in 0..21 {
        word.push_str("over 0\n");
    }
    word.push_str("cap 0\n");
    let path = scratch("wide.txt", &word);
    let out = run(&["bracket", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("crossing"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn quotient_report_is_deterministic_and_lists_survivors() {
    let args = ["quotient", "--preset", "s1xs2", "--K", "3", "--ring", "QA"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0), "stderr: {}", stderr(&first));
    let text = stdout(&first);
    assert!(text.starts_with("skein-report v1\n"));
    assert!(text.contains("ring QA\n"));
    let survivors = text
        .split("SURVIVORS\n")
        .nth(1)
        .and_then(|rest| rest.split("WITNESSES\n").next())
        .expect("survivor section");
    assert_eq!(survivors, "{}\n", "only the empty multicurve survives");
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout, "byte-identical reruns");
}

#[test]
fn quotient_writes_reports_to_files() {
    let path = std::env::temp_dir().join(format!("skein-cli-{}-report.txt", std::process::id()));
    let out = run(&[
        "quotient",
        "--preset",
        "connsum",
        "--n",
        "1",
        "--m",
        "1",
        "--K",
        "2",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = std::fs::read_to_string(&path).expect("report file");
    assert!(text.starts_with("skein-report v1\n"));
    assert!(text.contains("preset connsum\n"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn relations_report_omits_the_survivor_section() {
    let out = run(&["relations", "--preset", "s1xs2", "--K", "3"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("skein-report v1\n"));
    assert!(text.contains("RELATIONS\n"));
    assert!(!text.contains("SURVIVORS"), "relations output has no quotient section");
}

#[test]
fn verify_suites_pass_and_respect_the_seed() {
    let out = run(&["verify", "framing"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("framing: pass"));

    let first = run(&["verify", "oracle", "--seed", "7"]);
    let second = run(&["verify", "oracle", "--seed", "7"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "seeded runs are byte-identical");
}

#[test]
fn verify_rejects_unknown_suites() {
    let out = run(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown"));
}

#[test]
fn oversized_cutoffs_exit_with_the_guard_code() {
    let out = run(&["quotient", "--preset", "s1xs2", "--K", "10000"]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr(&out));
}

#[test]
fn empty_connected_sums_are_rejected() {
    let out = run(&["relations", "--preset", "connsum", "--n", "0", "--m", "0", "--K", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("at least one puncture"));
}
