use std::process::{Command, Output};

use regex::Regex;
use serde_json::Value;

const E: &str = "2.718281828459045";

fn hardy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hardy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn without_wall_time(out: &Output) -> String {
    let s = String::from_utf8_lossy(&out.stdout);
    Regex::new(r#""wall_time_ms": \d+"#)
        .unwrap()
        .replace_all(&s, "")
        .into_owned()
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(hardy(&["--help"]).status.code(), Some(0));
    assert_eq!(hardy(&["--version"]).status.code(), Some(0));
    assert_eq!(hardy(&["sweep", "--help"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(hardy(&[]).status.code(), Some(64));
    assert_eq!(hardy(&["beta", "--alpha", "0"]).status.code(), Some(64));
    assert_eq!(hardy(&["beta", "--alpha", "x", "--b", "2"]).status.code(), Some(64));
    assert_eq!(
        hardy(&["constants", "--alpha", "0", "--b", "2", "--format", "xml"])
            .status
            .code(),
        Some(64)
    );
    let bad = hardy(&["beta", "--alpha", "0", "--a", "2", "--b", "1"]);
    assert_eq!(bad.status.code(), Some(64));
    assert_eq!(json(&bad)["error"], "invalid-interval");
}

#[test]
fn negative_alpha_and_lists_parse() {
    let out = hardy(&["constants", "--alpha", "-2.5", "--b", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["inputs"]["alpha"].as_f64(), Some(-2.5));
    let out = hardy(&["sweep", "--alphas", "-3,-1", "--ratios", "2"]);
    assert_eq!(json(&out)["outputs"]["points"], 2);
}

#[test]
fn constants_report_k_below_m() {
    let v = json(&hardy(&["constants", "--alpha", "0", "--b", E]));
    let (k, m) = (v["outputs"]["K"].as_f64().unwrap(), v["outputs"]["M"].as_f64().unwrap());
    assert!((k - 3.623_089_286_626_21).abs() < 1e-10);
    assert!((m - 10.119_604_401_089_36).abs() < 1e-10);
    assert_eq!(v["outputs"]["K_lt_M"], true);
    assert!(v["diagnostics"].as_array().unwrap().iter().all(|d| d["pass"] == true));
}

#[test]
fn constants_without_k_still_succeed() {
    let out = hardy(&["constants", "--alpha", "1", "--b", E]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["outputs"]["K"], Value::Null);
    assert_eq!(v["outputs"]["K_status"], "alpha-excluded");
    let v = json(&hardy(&["constants", "--alpha", "4", "--b", E]));
    assert_eq!(v["outputs"]["K_status"], "no-root");
}

#[test]
fn runs_are_deterministic() {
    let args = [
        "verify-integral",
        "--alpha",
        "-1",
        "--b",
        "5",
        "--samples",
        "50",
        "--seed",
        "3",
    ];
    let first = hardy(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(without_wall_time(&first), without_wall_time(&hardy(&args)));
    let other = hardy(&[
        "verify-integral",
        "--alpha",
        "-1",
        "--b",
        "5",
        "--samples",
        "50",
        "--seed",
        "4",
    ]);
    assert_ne!(without_wall_time(&first), without_wall_time(&other));
}

#[test]
fn numbers_carry_seventeen_significant_digits() {
    let out = String::from_utf8(hardy(&["beta", "--alpha", "0", "--b", E]).stdout).unwrap();
    let re = Regex::new(r#""beta": (-?\d\.(\d{16})e[+-]\d+)"#).unwrap();
    let caps = re.captures(&out).expect("beta in scientific notation");
    assert!((caps[1].parse::<f64>().unwrap() - 1.836_597_203_152_125_7).abs() < 1e-15);
}

#[test]
fn sweep_dims_add_shell_columns() {
    let out = hardy(&[
        "sweep", "--alphas", "0", "--ratios", "2,10", "--dims", "2,3", "--format", "csv",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("alpha,ratio,beta,K,M,K_lt_M,shell_n2,shell_n3"));
    assert_eq!(lines.count(), 2);
    assert_eq!(
        hardy(&["sweep", "--alphas", "0", "--ratios", "2", "--dims", "1"])
            .status
            .code(),
        Some(64)
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = hardy(&[
        "sweep",
        "--alphas",
        "0",
        "--ratios",
        "2",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&path)
        .unwrap()
        .starts_with("alpha,ratio,beta,K,M,K_lt_M\n"));
}

#[test]
fn eigen_reports_both_boundary_conditions() {
    for bc in ["dirichlet", "robin"] {
        let out = hardy(&["eigen", "--alpha", "0", "--b", E, "--grid", "400", "--bc", bc]);
        assert_eq!(out.status.code(), Some(0), "{bc}");
        let v = json(&out);
        assert_eq!(v["outputs"]["eigenvector_positive"], true);
        assert!(v["outputs"]["relative_error"].as_f64().unwrap() < 1e-6);
    }
    assert_eq!(
        hardy(&["eigen", "--alpha", "0", "--b", E, "--grid", "4"]).status.code(),
        Some(64)
    );
}

#[test]
fn shell_excess_is_mu() {
    let v = json(&hardy(&[
        "shell", "--n", "3", "--alpha", "0", "--r1", "1", "--r2", E, "--mu", "2",
    ]));
    let c = v["outputs"]["shell_constant"].as_f64().unwrap();
    let q = v["outputs"]["quotient"].as_f64().unwrap();
    assert!((c - (0.25 + std::f64::consts::PI.powi(2))).abs() < 1e-12);
    assert!((q - c - 2.0).abs() < 1e-8);
    assert_eq!(
        hardy(&["shell", "--n", "1", "--alpha", "0", "--r1", "1", "--r2", "2"])
            .status
            .code(),
        Some(64)
    );
}

#[test]
fn csv_report_for_single_runs() {
    let text = String::from_utf8(hardy(&["beta", "--alpha", "2", "--b", E, "--format", "csv"]).stdout).unwrap();
    assert!(text.starts_with("section,name,value,tolerance,pass\n"));
    assert!(text.contains("output,branch,below-half-pi,,"));
}
