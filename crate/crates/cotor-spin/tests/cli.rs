//! End-to-end tests of the `cotor-spin` binary: golden table bytes, exit
//! codes, JSON round trips, and the environment hooks.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cotor-spin"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn table_9_16_matches_the_golden_bytes() {
    let out = run(&["table", "9", "16"]);
    assert!(out.status.success());
    let expected = concat!(
        " n s t  m m' eps h' l h\n",
        " 9 4 3  -  -   -  4 1 4\n",
        "10 4 3 10 13   0  5 1 5\n",
        "11 4 2 11 21   0  6 1 6\n",
        "12 4 2 11 21   0  6 1 6\n",
        "13 4 1 13 25   0  7 1 7\n",
        "14 4 1 13 25   0  7 1 7\n",
        "15 4 1 13 25   0  7 1 7\n",
        "16 4 1 13 25   0  7 1 7\n",
    );
    assert_eq!(stdout(&out), expected);
}

#[test]
fn table_17_32_matches_the_golden_bytes() {
    let out = run(&["table", "17", "32"]);
    assert!(out.status.success());
    let expected = concat!(
        " n s t  m m' eps h' l  h\n",
        "17 5 4  -  -   -  5 2  8\n",
        "18 5 4 18 29   0  6 2  9\n",
        "19 5 4 19 27   0  6 2 10\n",
        "20 5 4 20 25   0  6 2 10\n",
        "21 5 4 21 23   0  6 2 11\n",
        "22 5 4 22 21   1  7 2 11\n",
        "23 5 3 23 37   0  7 2 11\n",
        "24 5 3 23 37   0  7 2 11\n",
        "25 5 3 25 29   0  7 3 12\n",
        "26 5 3 26 25   1  8 3 13\n",
        "27 5 2 27 41   0  8 3 14\n",
        "28 5 2 27 41   0  8 3 14\n",
        "29 5 1 29 49   0  9 3 15\n",
        "30 5 1 29 49   0  9 3 15\n",
        "31 5 1 29 49   0  9 3 15\n",
        "32 5 1 29 49   0  9 3 15\n",
    );
    assert_eq!(stdout(&out), expected);
}

#[test]
fn table_33_40_has_h_prime_below_h() {
    let out = run(&["table", "33", "40", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,s,t,m,m',eps,h',l,h"));
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        let h_prime: u32 = cells[6].parse().unwrap();
        let h: u32 = cells[8].parse().unwrap();
        assert!(h_prime < h, "{line}");
    }
}

#[test]
fn analyze_13_prints_generators_and_verdict() {
    let out = run(&["analyze", "13"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("v_6 = w13^5"));
    assert!(text.contains("collapse verdict: collapses"));
}

#[test]
fn analyze_17_does_not_collapse() {
    let out = run(&["analyze", "17"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("does_not_collapse"));
    assert!(text.contains("h = 8"));
}

#[test]
fn analyze_8_is_a_usage_error() {
    let out = run(&["analyze", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_bad_range_is_a_usage_error() {
    let out = run(&["table", "16", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn series_diff_16_prints_equal() {
    let out = run(&["series", "16", "64", "diff"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "equal");
}

#[test]
fn series_diff_17_prints_32() {
    let out = run(&["series", "17", "64", "diff"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "32");
}

#[test]
fn series_diff_29_too_small_window_exits_3() {
    let out = run(&["series", "29", "64", "diff"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn series_13_both_lists_agree() {
    let out = run(&["series", "13", "40", "both"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(
        lines[0].strip_prefix("cotor: ").unwrap(),
        lines[1].strip_prefix("quillen: ").unwrap()
    );
}

#[test]
fn series_json_round_trips() {
    let out = run(&["series", "17", "64", "diff", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["first_divergence"], serde_json::json!(32));
    // Reserializing the parsed document reproduces the bytes.
    assert_eq!(format!("{value}\n"), text);

    let out = run(&["series", "9", "12", "cotor", "--format", "json"]);
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(format!("{value}\n"), text);
    assert_eq!(value["cotor"].as_array().unwrap().len(), 13);
}

#[test]
fn series_csv_shape() {
    let out = run(&["series", "9", "8", "quillen", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "degree,coefficient");
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[1], "0,1");
}

#[test]
fn truncation_env_sets_the_default() {
    let out = bin()
        .args(["series", "9", "--format", "csv"])
        .env("COTOR_SPIN_TRUNCATE", "10")
        .output()
        .unwrap();
    assert!(out.status.success());
    // Header plus degrees 0..=10.
    assert_eq!(stdout(&out).lines().count(), 12);
}

#[test]
fn verify_9_32_exits_zero() {
    let out = run(&["verify", "9", "32"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("summary: 24/24 passed"));
}

#[test]
fn verify_across_the_power_boundary() {
    // n = 33 has an empty D (no order, no relations); its neighbours carry
    // full weight-order certificates.
    let out = run(&["verify", "32", "34", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("summary: 3/3 passed"));
}

#[test]
fn verify_with_corrupted_generator_exits_one() {
    let out = bin()
        .args(["verify", "13", "22"])
        .env("COTOR_SPIN_CORRUPT", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn verify_json_reports_every_check() {
    let out = run(&["verify", "17", "17", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let entry = &value.as_array().unwrap()[0];
    assert_eq!(entry["n"], serde_json::json!(17));
    assert_eq!(entry["ok"], serde_json::json!(true));
    assert!(entry["checks"].as_array().unwrap().len() >= 8);
    assert_eq!(format!("{value}\n"), text);
}

#[test]
fn groebner_13_verifies_the_quotient_series() {
    let out = run(&["groebner", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("leading monomials: w7*w10, w11^3, w13^5"));
    assert!(text.contains("is_groebner: true"));
    assert!(text.contains("matches closed form x 1/(1 - t^(2^h')): true"));
}

#[test]
fn groebner_9_is_a_usage_error() {
    let out = run(&["groebner", "9"]);
    assert_eq!(out.status.code(), Some(2));
}
