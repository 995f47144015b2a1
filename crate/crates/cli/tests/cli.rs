use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heunforge"))
        .args(args)
        .env_remove("HEUNFORGE_BACKEND")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&text).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

const HEUN: &str = "gamma=1/2,delta=1/3,alpha=-1,beta=2,q=1/5,a=2";

#[test]
fn classify_heun_lists_eight_labelled_branches() {
    let (code, v) = json(&["classify", "--heun", HEUN]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let mut classes: Vec<&str> = rows.iter().map(|r| r["class"].as_str().unwrap()).collect();
    classes.sort();
    classes.dedup();
    assert_eq!(classes.len(), 8);
    assert!(rows[0]["g"][0]["re"].is_f64());
}

#[test]
fn classify_che_and_custom() {
    let (code, v) = json(&["classify", "--che", "alpha=3/2,beta=-2/5,gamma=1/3,mu=7/4,nu=-1/6"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 8);
    // harmonic oscillator in classic mode
    let (code, v) = json(&["classify", "--classic", "--sigma", "1", "--tau-tilde", "0", "--sigma-tilde", "5 - z^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn degree_bound_is_a_usage_error() {
    let out = run(&["classify", "--sigma", "z^5", "--tau-tilde", "1", "--sigma-tilde", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["classify", "--sigma", "z^2 +", "--tau-tilde", "1", "--sigma-tilde", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_heun_classes() {
    for (class, prefactor) in [("I", "1"), ("II", "z^(0.5)")] {
        let (code, v) = json(&["solve", "--heun", "gamma=1/2,delta=1/3,epsilon=1/4,a=2", "--class", class, "--n", "2"]);
        assert_eq!(code, 0, "{v}");
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 3);
        for r in rows {
            assert_eq!(r["phi"], prefactor);
            assert!(r["residual"].as_f64().unwrap() < 1e-8);
        }
    }
}

#[test]
fn solve_che_bare_polynomial_and_exponential() {
    let (code, v) = json(&["solve", "--che", "alpha=3/2,beta=-2/5,gamma=1/3", "--class", "pi2", "--n", "1"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["rows"][0]["phi"], "1");
    let (code, v) = json(&["solve", "--che", "alpha=3/2,beta=-2/5,gamma=1/3", "--class", "pi6", "--n", "1"]);
    assert_eq!(code, 0);
    assert!(v["rows"][0]["phi"].as_str().unwrap().starts_with("exp("));
}

#[test]
fn unsatisfied_relation_has_no_solution() {
    let out = run(&["solve", "--heun", "gamma=1/2,delta=1/3,a=2,alpha=1,beta=1", "--class", "I", "--n", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn failed_check_exits_four() {
    let out = run(&["--tol", "residual=1e-30", "solve", "--heun", "gamma=1/2,delta=1/3,epsilon=1/4,a=2", "--class", "I", "--n", "1"]);
    assert_eq!(out.status.code(), Some(4));
    let out = run(&["--tol", "bogus=1", "app", "coulomb3s", "--n", "0", "--m", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn apps() {
    let (code, v) = json(&["app", "coulomb3s", "--n", "0", "--m", "0", "--gamma", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["energy"], -1.0);
    let (code, v) = json(&["app", "electrons-sphere", "--n", "1", "--gamma", "1", "--delta", "2"]);
    assert_eq!(code, 0);
    assert!((v["radius"].as_f64().unwrap() - 0.5f64.sqrt()).abs() < 1e-12);
    let (code, v) = json(&["app", "double-well", "--n", "0", "--d", "1", "--u0", "49", "--parity", "symmetric"]);
    assert_eq!(code, 0);
    assert_eq!(v["epsilon"], -4.0);
    assert_eq!(run(&["app", "harmonic"]).status.code(), Some(2));
}

#[test]
fn exact_reports_rationals_and_reproduce() {
    let args = ["--backend", "exact", "--format", "json", "solve", "--che", "alpha=3/2,beta=-2/5,gamma=1/3", "--class", "pi6", "--n", "1"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["mu+nu"]["re"], serde_json::json!({ "num": 22, "den": 5 }));
    // parsing and re-serialising changes nothing
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(again.as_bytes(), a.stdout.as_slice());
}

#[test]
fn backend_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_heunforge"))
        .args(["--format", "json", "app", "coulomb3s", "--n", "1", "--m", "0"])
        .env("HEUNFORGE_BACKEND", "exact")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["backend"], "exact");
    assert_eq!(v["class_one"]["re"]["num"], 0);
}

#[test]
fn csv_and_table() {
    let out = run(&["--format", "csv", "app", "double-well", "--n", "1", "--d", "1", "--u0", "100"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n,d,u0,parity,"));
    assert_eq!(text.lines().count(), 3);
    let out = run(&["app", "double-well", "--n", "1", "--d", "1", "--u0", "100"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("ok   termination"));
}
