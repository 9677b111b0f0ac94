//! End-to-end checks of the `qsocle` binary: output formats, exit codes,
//! and agreement with the pinned reference table.

use serde_json::Value;
use std::process::{Command, Output};

fn qsocle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsocle"))
        .args(args)
        .env_remove("QSOCLE_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn analyze_reports_the_showcase_point_in_json() {
    let out = qsocle(&[
        "analyze",
        "--gens",
        "7,10,18,22",
        "--s",
        "21",
        "--q",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["socle_generators"], serde_json::json!([21, 25, 29, 34, 37, 40]));
    assert_eq!(v["integral_over_q"], Value::Bool(true));
    assert_eq!(v["mq_stable"], Value::Bool(false));
    assert_eq!(v["reduction_number"], serde_json::json!(2));
    assert_eq!(v["cm"], Value::Bool(true));
    assert_eq!(v["lengths"], serde_json::json!([10, 1]));
}

#[test]
fn non_integral_points_render_infinity_and_nulls() {
    let human = qsocle(&["analyze", "--gens", "5,6", "--s", "10", "--q", "5"]);
    assert_eq!(code(&human), 0);
    let text = stdout(&human);
    assert!(text.contains("∞"), "{text}");
    assert!(text.contains("n/a"), "{text}");
    assert!(text.contains("integral over Q        no"), "{text}");

    let json = qsocle(&[
        "analyze", "--gens", "5,6", "--s", "10", "--q", "5", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["reduction_number"], Value::Null);
    assert_eq!(v["cm"], Value::Null);
}

#[test]
fn table_markdown_matches_the_pinned_reference() {
    let out = qsocle(&[
        "table",
        "--gens",
        "10,13,16,17,19",
        "--q",
        "3",
        "--s-list",
        "10,13,16,17,19",
        "--format",
        "markdown",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        include_str!("../../core/src/verify/golden/table1.md")
    );
}

#[test]
fn range_tables_collapse_to_a_pattern() {
    let out = qsocle(&[
        "table",
        "--gens",
        "7,10,18,22",
        "--q",
        "3",
        "--s-range",
        "1..102",
        "--format",
        "markdown",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("| s | I | G(I) is CM | r_Q(I) | m^3 I = m^3 Q |\n"));
    assert!(text.contains("| 21 | (21,25,29,34,37,40) | Yes | 2 | No |\n"));
    assert!(text.ends_with("| otherwise | (s,s+4,s+8,s+13,s+16,s+19) | No | 2 | No |\n"));
}

#[test]
fn usage_errors_exit_one_and_name_the_input() {
    let gcd = qsocle(&["semigroup", "--gens", "4,6"]);
    assert_eq!(code(&gcd), 1);
    assert!(stderr(&gcd).contains("gcd 2"));

    let member = qsocle(&["analyze", "--gens", "5,6", "--s", "13", "--q", "2"]);
    assert_eq!(code(&member), 1);
    assert!(stderr(&member).contains("13 is not an element"));

    let statement = qsocle(&["verify", "--statement", "BOGUS"]);
    assert_eq!(code(&statement), 1);
    assert!(stderr(&statement).contains("unknown statement `BOGUS`"));

    let table = qsocle(&["table", "--gens", "5,6", "--q", "2"]);
    assert_eq!(code(&table), 1);
    assert!(stderr(&table).contains("--s-list"));

    let range = qsocle(&["table", "--gens", "5,6", "--q", "2", "--s-range", "9..3"]);
    assert_eq!(code(&range), 1);

    let criterion = qsocle(&["verify", "--criterion", "9"]);
    assert_eq!(code(&criterion), 1);

    let stray_point = qsocle(&["verify", "--s", "16"]);
    assert_eq!(code(&stray_point), 1);
    assert!(stderr(&stray_point).contains("--statement"));

    let flag = qsocle(&["semigroup", "--gens", "5,6", "--format", "bogus"]);
    assert_eq!(code(&flag), 1);

    let subcommand = qsocle(&["nosuch"]);
    assert_eq!(code(&subcommand), 1);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&qsocle(&["--help"])), 0);
    assert_eq!(code(&qsocle(&["--version"])), 0);
    assert_eq!(code(&qsocle(&["verify", "--help"])), 0);
}

#[test]
fn sweeps_and_point_checks_succeed() {
    let sweep = qsocle(&["verify", "--statement", "RED_FORMULA", "--a-max", "12"]);
    assert_eq!(code(&sweep), 0);
    assert!(stdout(&sweep).contains("0 fail"));

    let point = qsocle(&[
        "verify",
        "--statement",
        "CM_IFF",
        "--ell",
        "2",
        "--r",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(code(&point), 0);
    let v: Value = serde_json::from_str(&stdout(&point)).unwrap();
    assert_eq!(v["conclusion_holds"], Value::Bool(true));

    let all = qsocle(&[
        "verify",
        "--a-max",
        "6",
        "--conductor-max",
        "60",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&all), 0);
    let text = stdout(&all);
    assert!(text.starts_with("statement,total,hypotheses_unmet,holds,fails\n"));
    assert_eq!(text.lines().count(), 16, "15 statements plus the header");
    for line in text.lines().skip(1) {
        assert!(line.ends_with(",0"), "no failing sweep line: {line}");
    }
}

#[test]
fn criteria_run_from_the_cli() {
    let out = qsocle(&["verify", "--criterion", "6"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS"));

    let json = qsocle(&["verify", "--criterion", "1", "--format", "json"]);
    assert_eq!(code(&json), 0);
    let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
}

#[test]
fn oracle_runs_are_deterministic() {
    let first = qsocle(&["oracle", "--trials", "60", "--format", "json"]);
    let second = qsocle(&["oracle", "--trials", "60", "--format", "json"]);
    assert_eq!(code(&first), 0);
    assert_eq!(stdout(&first), stdout(&second));
    let v: Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(v["disagreements"], serde_json::json!(0));
    assert_eq!(v["seed"], serde_json::json!(20260814u64));
}

#[test]
fn the_format_env_var_sets_the_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_qsocle"))
        .args(["semigroup", "--gens", "5,6"])
        .env("QSOCLE_FORMAT", "json")
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["symmetric"], Value::Bool(true));
    assert_eq!(v["frobenius"], serde_json::json!(19));
}
