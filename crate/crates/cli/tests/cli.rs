use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn umbra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umbra")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn terms(v: &Value) -> Vec<String> {
    v["terms"].as_array().unwrap().iter().map(|t| t.as_str().unwrap().to_string()).collect()
}

#[test]
fn binomial_of_ones() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "a.json", r#"{"terms": ["1", "1", "1"]}"#);
    let o = umbra(&["transform", "binomial", &input]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(terms(&json(&o)), ["1", "0", "0"]);
}

#[test]
fn modular_example_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "a.json", r#"{"terms": ["1", "2", "4"]}"#);
    let o = umbra(&["transform", "modular", &input, "--alpha", "1", "--beta", "1"]);
    assert_eq!(terms(&json(&o)), ["1", "-1", "1"]);

    let input = write(dir.path(), "b.json", r#"{"terms": ["3/7", "-2", "0", "11/5", "1"]}"#);
    let fwd = dir.path().join("fwd.json");
    let o = umbra(&["transform", "modular", &input, "--alpha", "2/3", "--beta", "-5", "-o", fwd.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let o = umbra(&["transform", "modular-inverse", fwd.to_str().unwrap(), "--alpha", "2/3", "--beta", "-5"]);
    assert_eq!(terms(&json(&o)), ["3/7", "-2", "0", "11/5", "1"]);
}

#[test]
fn malformed_rational_exits_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.json", "{\"terms\": [\"1\",\n \"1/0\"]}");
    let o = umbra(&["transform", "binomial", &input]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn missing_or_invalid_parameters_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "a.json", r#"{"terms": ["1", "2"]}"#);
    assert_eq!(code(&umbra(&["transform", "modular", &input, "--alpha", "1"])), 3);
    assert_eq!(code(&umbra(&["transform", "modular-inverse", &input, "--alpha", "1", "--beta", "0"])), 3);
    assert_eq!(code(&umbra(&["transform", "rising-k", &input])), 3);
}

#[test]
fn involution_suite_passes_with_zero_residual() {
    let o = umbra(&["check", "involution", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let rows = v["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    for r in rows {
        assert_eq!(r["status"], "pass");
        assert_eq!(r["residual"].as_f64(), Some(0.0));
    }
}

#[test]
fn disentangle_suite_has_two_flagged_rows() {
    let o = umbra(&["check", "disentangle"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("# flagged_errata=2"));
    assert!(out.contains("# failed=0"));
    assert_eq!(out.lines().filter(|l| l.contains(",flagged-errata,")).count(), 2);
}

#[test]
fn unknown_suite_exits_3() {
    assert_eq!(code(&umbra(&["check", "no-such-suite"])), 3);
}

#[test]
fn impossible_tolerance_fails_check() {
    // a negative tolerance cannot be met by any measured residual
    let o = umbra(&["check", "heat", "--tolerance", "-1"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn timings_column_is_opt_in() {
    let plain = stdout(&umbra(&["check", "pauli"]));
    assert!(!plain.contains("runtime_s"));
    let timed = stdout(&umbra(&["check", "pauli", "--timings"]));
    assert!(timed.contains("runtime_s"));
}

#[test]
fn identity_expansion_gives_gaussian_taylor_coefficients() {
    let o = umbra(&["expand", "--family", "identity", "-n", "6", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    let rows = v[0]["rows"].as_array().unwrap();
    let want = [1.0, 0.0, -1.0, 0.0, 0.5, 0.0, -1.0 / 6.0];
    for (r, w) in rows.iter().zip(want) {
        assert!((r["re"].as_f64().unwrap() - w).abs() < 1e-12, "{r}");
    }
    assert_eq!(v[1]["table"], "reconstruction");
}

#[test]
fn bernoulli_expansion_matches_oracle_column() {
    let o = umbra(&["expand", "--family", "bernoulli", "-n", "10", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    let rows = v[0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 11);
    for r in rows {
        assert!(r["abs_diff"].as_f64().unwrap() <= 1e-8, "{r}");
    }
}

#[test]
fn growing_family_exits_4_naming_n() {
    let o = umbra(&["expand", "--family", "gaussian:1", "-n", "4"]);
    assert_eq!(code(&o), 4);
    assert!(stderr(&o).contains("n = "), "{}", stderr(&o));
}

#[test]
fn unknown_family_exits_3() {
    assert_eq!(code(&umbra(&["expand", "--family", "chebyshev"])), 3);
}

#[test]
fn user_taylor_family() {
    // A = 1 + t: (1 + ∂) Σ α_n xⁿ = f gives α_n + (n+1) α_{n+1} = f_n. 1/A has
    // radius 1, so the operational series does not settle and the oracle
    // column is empty.
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "a.json", r#"{"terms": ["1", "1"]}"#);
    let spec = format!("taylor:{f}");
    let o = umbra(&["expand", "--family", &spec, "-n", "6", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let rows = json(&o)[0]["rows"].as_array().unwrap().clone();
    let a: Vec<f64> = rows.iter().map(|r| r["re"].as_f64().unwrap()).collect();
    let taylor = [1.0, 0.0, -1.0, 0.0, 0.5, 0.0];
    for n in 0..6 {
        assert!((a[n] + (n + 1) as f64 * a[n + 1] - taylor[n]).abs() < 1e-10, "n = {n}");
    }
    assert!(rows.iter().all(|r| r["oracle"].is_null()));
}

#[test]
fn tricomi_spot_value() {
    let o = umbra(&["evolve", "tricomi", "--x", "1", "--tau", "1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let row = &json(&o)["rows"][0];
    assert!((row["re"].as_f64().unwrap() - 0.5206029).abs() < 5e-8);
    assert!(row["oracle_residual"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn heat_with_zero_time_returns_input() {
    let o = umbra(&["evolve", "heat", "--alpha", "0", "--scale", "0.5", "--points", "64", "--format", "json"]);
    assert_eq!(code(&o), 0);
    for r in json(&o)["rows"].as_array().unwrap() {
        let x = r["x"].as_f64().unwrap();
        assert_eq!(r["re"].as_f64().unwrap(), (-0.5 * x * x).exp());
    }
}

#[test]
fn integro_diff_parity_and_region() {
    assert_eq!(code(&umbra(&["evolve", "integro-diff", "--m", "3"])), 3);
    assert_eq!(code(&umbra(&["evolve", "integro-diff", "--x", "0.7", "--tau", "0.1"])), 4);
    let o = umbra(&["evolve", "integro-diff", "--beta", "0.5", "--x", "0:0.5:3", "--tau", "0:0.5:3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    assert!(v["max_oracle_residual"].as_f64().unwrap() <= 1e-6);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = umbra(&["evolve", "tricomi", "--x", "0:1:4", "--tau", "0:1:4", "-o", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let text = fs::read_to_string(&a).unwrap();
    assert!(text.starts_with("# table=tricomi\n# max_nodes="));
}

#[test]
fn sequential_flag_gives_same_report() {
    let par = umbra(&["check", "hermite-integral"]);
    let seq = umbra(&["check", "hermite-integral", "--sequential"]);
    assert_eq!(par.stdout, seq.stdout);
}

#[test]
fn help_documents_csv_columns() {
    let o = umbra(&["--help"]);
    assert!(stdout(&o).contains("oracle_residual"));
}
