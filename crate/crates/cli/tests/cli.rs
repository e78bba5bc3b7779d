//! End-to-end checks of the binary: output formats, method agreement, and
//! exit codes (0 success, 1 verification failure, 2 usage).

use std::process::{Command, Output};

fn annular(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_annular"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn dist_formula_json_matches_frozen_counts() {
    let out = annular(&["dist", "--p", "4", "--q", "2", "--s", "2", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["edges"], 3);
    assert_eq!(value["rows"][0]["k"], 1);
    assert_eq!(value["rows"][0]["genus"], 1);
    assert_eq!(value["rows"][0]["count"], "4");
    assert_eq!(value["rows"][1]["k"], 3);
    assert_eq!(value["rows"][1]["count"], "8");
    assert_eq!(value["total"], "12");
}

#[test]
fn dist_methods_agree() {
    let formula = annular(&["dist", "--p", "5", "--q", "3", "--s", "3", "--format", "csv"]);
    for method in ["reduction", "brute"] {
        let other = annular(&[
            "dist", "--p", "5", "--q", "3", "--s", "3", "--method", method, "--format", "csv",
        ]);
        assert!(other.status.success());
        assert_eq!(stdout(&formula), stdout(&other), "{method} differs");
    }
}

#[test]
fn hz_csv_snapshot() {
    let out = annular(&["hz", "--p", "4", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "k,genus,count\n1,1,1\n3,0,2\n");
}

#[test]
fn hz_methods_agree() {
    let formula = annular(&["hz", "--p", "8", "--format", "csv"]);
    let brute = annular(&["hz", "--p", "8", "--method", "brute", "--format", "csv"]);
    assert_eq!(stdout(&formula), stdout(&brute));
}

#[test]
fn sum_methods_agree() {
    let gs = annular(&["sum", "--p", "2", "--q", "4", "--format", "csv"]);
    assert!(gs.status.success());
    assert_eq!(stdout(&gs), "k,genus,coefficient\n1,1,4\n3,0,8\n");
    for method in ["sum-s", "brute"] {
        let other = annular(&["sum", "--p", "2", "--q", "4", "--method", method, "--format", "csv"]);
        assert_eq!(stdout(&gs), stdout(&other), "{method} differs");
    }
    let jackson = annular(&["sum", "--p", "3", "--q", "3", "--method", "jackson", "--format", "csv"]);
    let square = annular(&["sum", "--p", "3", "--q", "3", "--format", "csv"]);
    assert_eq!(stdout(&jackson), stdout(&square));
}

#[test]
fn maps_match_frozen_counts() {
    let out = annular(&["maps", "--p", "4", "--q", "2", "--s", "2", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["crosschecked"], true);
    assert_eq!(value["rows"][0]["genus"], 0);
    assert_eq!(value["rows"][0]["faces"], 3);
    assert_eq!(value["rows"][0]["count"], "6");
    assert_eq!(value["rows"][1]["genus"], 1);
    assert_eq!(value["rows"][1]["count"], "3");
    assert_eq!(value["total"], "9");
}

#[test]
fn verify_forests_suite_passes() {
    let out = annular(&["verify", "--suite", "forests", "--max-n", "3", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["pass"], true);
    assert!(!value["checks"].as_array().unwrap().is_empty());
}

#[test]
fn usage_and_validation_exit_2() {
    for args in [
        &[][..],
        &["nosuch"][..],
        &["dist", "--p", "3", "--q", "2", "--s", "1"][..],
        &["dist", "--p", "0", "--q", "2", "--s", "2"][..],
        &["hz", "--p", "3"][..],
        &["sum", "--p", "2", "--q", "4", "--method", "jackson"][..],
        &["dist", "--p", "10", "--q", "10", "--s", "2", "--method", "brute", "--max-brute", "12"][..],
    ] {
        let out = annular(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn thread_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_annular"))
        .args(["dist", "--p", "4", "--q", "4", "--s", "2", "--method", "brute", "--format", "csv"])
        .env("ANNULAR_THREADS", "1")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let reference = annular(&["dist", "--p", "4", "--q", "4", "--s", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), stdout(&reference));
}
