use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reflectq")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).expect("json report");
    (out.status.code().unwrap(), v)
}

#[test]
fn derive_k_reports_the_singlet_solution() {
    let (code, v) = json(&["derive-k", "uq-sl2-B1"]);
    assert_eq!(code, 0);
    assert_eq!(v["artifact"], "reflectq");
    let r = &v["results"][0];
    assert_eq!(r["k_matrix"]["entries"][1][1], "(c*z - 1)/(z*(c - z))");
    assert_eq!(r["free_symbols"], serde_json::json!(["c"]));
    assert_eq!(r["nullity"], 1);
}

#[test]
fn verify_ybe_passes() {
    let out = run(&["verify-ybe", "y-gl11"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS"));
}

#[test]
fn unknown_keys_exit_with_bad_input() {
    let out = run(&["derive-k", "nonexistent"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("uq-sl2-B1") && err.contains("y-gl11-II"));

    let out = run(&["verify-ybe", "so3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("y-sl2"));

    let out = run(&["limit-check", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("appendixA-cartan"));

    assert_eq!(run(&["--set", "zz=1", "derive-k", "y-sl2-I"]).status.code(), Some(2));
}

#[test]
fn failed_verification_exits_one() {
    // Generic boundary parameters leave no solution.
    let (code, v) = json(&["--set", "dp=1", "--set", "dm=1", "derive-k", "uq-sl2-B1"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"][0]["nullity"], 0);
}

#[test]
fn overrides_reach_the_solver() {
    let (code, v) = json(&["--set", "dp=2/q", "--set", "dm=2*q", "derive-k", "uq-sl2-B1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["k_matrix"]["entries"][1][1], "(-2*z + 1)/(z*(z - 2))");
}

#[test]
fn solve_params_and_limits() {
    let (code, v) = json(&["solve-params", "uq-gl11-B6"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["bindings"]["dm"], "(-q^2 + 1)/(2*q)");

    let (code, v) = json(&["limit-check", "sl2-II-Bplus"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["match"], true);
    assert_eq!(v["results"][0]["negative_orders_zero"], true);
}

#[test]
fn fusion_records_the_working_choice() {
    let (code, v) = json(&["fuse", "uq-sl2-B1"]);
    assert_eq!(code, 0);
    let choices = v["results"][0]["choices"].as_array().unwrap();
    assert!(choices.iter().any(|c| c["matches"] == true && c["re_zero"] == true));
}

#[test]
fn suite_is_deterministic() {
    let a = run(&["--format", "json", "suite"]);
    let b = run(&["--format", "json", "suite"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let ids: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn out_writes_the_report() {
    let path = std::env::temp_dir().join(format!("reflectq-{}.json", std::process::id()));
    let out = run(&["--format", "json", "--out", path.to_str().unwrap(), "verify-ybe", "uq-sl2-affine"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["results"][0]["residual_zero"], true);
    std::fs::remove_file(path).ok();
}
