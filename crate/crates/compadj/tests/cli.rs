//! End-to-end tests of the command-line binary: worked examples, JSON output
//! shapes, exit codes, and file output.

use std::process::{Command, Output};

use serde_json::Value;

fn compadj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compadj")).args(args).output().expect("binary launches")
}

fn json_of(output: &Output) -> Value {
    assert!(output.status.success(), "command failed: {}", String::from_utf8_lossy(&output.stderr));
    serde_json::from_slice(&output.stdout).expect("stdout is one JSON document")
}

fn complex_of(v: &Value) -> (f64, f64) {
    (v["re"].as_f64().expect("re"), v["im"].as_f64().expect("im"))
}

fn assert_close(v: &Value, re: f64, im: f64, tol: f64) {
    let (vr, vi) = complex_of(v);
    let err = ((vr - re).powi(2) + (vi - im).powi(2)).sqrt();
    assert!(err <= tol, "expected {re}+{im}i, got {vr}+{vi}i (error {err:.3e})");
}

#[test]
fn classify_reports_class_and_value_at_infinity() {
    let doc = json_of(&compadj(&["classify", "z/(2*z+4)"]));
    assert_eq!(doc["command"], "classify");
    assert_eq!(doc["class"], "Interior");
    assert_close(&doc["value_at_infinity"], 0.5, 0.0, 1e-15);
    assert_eq!(doc["self_map"]["is_self_map"], true);

    let doc = json_of(&compadj(&["classify", "z^2"]));
    assert_eq!(doc["class"], "Infinity");
    assert_eq!(doc["value_at_infinity"], "infinity");
}

#[test]
fn branches_solves_the_squaring_map() {
    let doc = json_of(&compadj(&["branches", "z^2", "--at", "0.25"]));
    assert_eq!(doc["nominal_degree"], 2);
    assert_eq!(doc["degree_deficit"], 0);
    let branches = doc["branches"].as_array().expect("branch array");
    assert_eq!(branches.len(), 2);
    let mut locations: Vec<f64> = branches.iter().map(|b| complex_of(&b["sigma"]).0).collect();
    locations.sort_by(f64::total_cmp);
    assert!((locations[0] + 0.5).abs() <= 1e-12);
    assert!((locations[1] - 0.5).abs() <= 1e-12);
    for b in branches {
        assert_close(&b["psi"], 0.5, 0.0, 1e-12);
        assert_eq!(b["multiplicity"], 1);
    }
}

#[test]
fn branches_solves_the_exterior_linear_fractional_map() {
    let doc = json_of(&compadj(&["branches", "(2*z)/(z+4)", "--at", "0.25"]));
    let branches = doc["branches"].as_array().expect("branch array");
    assert_eq!(branches.len(), 1);
    assert_close(&branches[0]["sigma"], -0.125, 0.0, 1e-12);
    assert_close(&branches[0]["psi"], -1.0, 0.0, 1e-12);
}

#[test]
fn adjoint_coefficient_examples() {
    let doc = json_of(&compadj(&["adjoint", "(2*z)/(z+4)", "--f", "1", "--coeffs", "4"]));
    let coeffs = doc["coefficients"].as_array().expect("coefficients");
    assert_eq!(coeffs.len(), 4);
    let expected = [1.0, 0.0, 0.0, 0.0];
    for (c, want) in coeffs.iter().zip(expected) {
        assert_close(c, want, 0.0, 1e-10);
    }

    let doc = json_of(&compadj(&["adjoint", "z^2", "--f", "z^4+z^2", "--coeffs", "4"]));
    let coeffs = doc["coefficients"].as_array().expect("coefficients");
    let expected = [0.0, 1.0, 1.0, 0.0];
    for (c, want) in coeffs.iter().zip(expected) {
        assert_close(c, want, 0.0, 1e-10);
    }
}

#[test]
fn adjoint_pointwise_on_the_identity_map() {
    let doc = json_of(&compadj(&["adjoint", "z", "--f", "z^3", "--at", "0.5"]));
    let values = doc["values"].as_array().expect("values");
    assert_eq!(values.len(), 1);
    assert_close(&values[0]["at"], 0.5, 0.0, 1e-15);
    assert_close(&values[0]["value"], 0.125, 0.0, 1e-12);
}

#[test]
fn adjoint_accepts_repeated_evaluation_points() {
    let doc =
        json_of(&compadj(&["adjoint", "z^2", "--f", "z^2", "--at", "0.25", "--at", "0.1+0.2i"]));
    let values = doc["values"].as_array().expect("values");
    assert_eq!(values.len(), 2);
    // C*_{z^2} z^2 = z, so the values are the points themselves.
    assert_close(&values[0]["value"], 0.25, 0.0, 1e-12);
    assert_close(&values[1]["value"], 0.1, 0.2, 1e-12);
}

#[test]
fn verify_runs_a_single_suite() {
    let out = compadj(&["verify", "--suite", "counterexamples"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).expect("JSON report");
    assert_eq!(doc["passed"], true);
    let reports = doc["reports"].as_array().expect("reports");
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["suite"], "counterexamples");
    assert_eq!(reports[0]["passed"], true);
    assert!(reports[0]["cases"].as_array().expect("cases").len() >= 8);
}

#[test]
fn out_flag_writes_the_same_document_to_a_file() {
    let path = std::env::temp_dir().join(format!("compadj-cli-{}.json", std::process::id()));
    let out = compadj(&["classify", "z^3", "--out", path.to_str().expect("utf-8 path")]);
    assert!(out.status.success());
    let on_disk = std::fs::read_to_string(&path).expect("out file written");
    std::fs::remove_file(&path).ok();
    assert_eq!(on_disk.as_bytes(), out.stdout.as_slice());
}

#[test]
fn syntax_errors_exit_with_code_2() {
    let out = compadj(&["classify", "2z"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("syntax error"), "stderr: {stderr}");
    assert!(out.stdout.is_empty());
}

#[test]
fn invalid_maps_exit_with_code_2() {
    // Not a self-map of the disk.
    assert_eq!(compadj(&["classify", "2*z"]).status.code(), Some(2));
    // Identically zero denominator.
    assert_eq!(compadj(&["classify", "z/0"]).status.code(), Some(2));
    // A test function with a pole inside the disk is rejected before any
    // numerics run, but as a numeric-domain error.
    let out = compadj(&["adjoint", "z^2", "--f", "1/(z-0.5)", "--at", "0.1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn numeric_failures_exit_with_code_3() {
    let out = compadj(&["branches", "z^2", "--at", "0"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("z = 0"), "stderr: {stderr}");
}

#[test]
fn usage_errors_exit_with_code_2() {
    // Neither --at nor --coeffs.
    assert_eq!(compadj(&["adjoint", "z^2", "--f", "1"]).status.code(), Some(2));
    // Both modes at once is a clap conflict, which also exits 2.
    assert_eq!(
        compadj(&["adjoint", "z^2", "--f", "1", "--at", "0.1", "--coeffs", "4"]).status.code(),
        Some(2)
    );
    // Unknown suite name.
    assert_eq!(compadj(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    // Invalid sampling geometry.
    assert_eq!(
        compadj(&["adjoint", "z^2", "--f", "1", "--coeffs", "4", "--radius", "1.5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        compadj(&["adjoint", "z^2", "--f", "1", "--coeffs", "4", "--samples", "100"]).status.code(),
        Some(2)
    );
}

#[test]
fn grammar_accepts_scientific_notation_and_nested_parentheses() {
    let doc = json_of(&compadj(&["classify", "((1e-1 + 2.5e-1i)*z^2)/((1+0.0i)*(2+z))"]));
    assert_eq!(doc["command"], "classify");
    let out = compadj(&["classify", "z^(-1)"]);
    assert_eq!(out.status.code(), Some(2));
}
