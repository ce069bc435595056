//! Runs the `descartes` binary and checks output and exit codes.

use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descartes"))
        .args(args)
        .env_remove("DESCARTES_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn analyze_reports_bounds_and_candidates() {
    let o = run(&["analyze", "+---+"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("k=2"), "{s}");
    assert!(s.contains("admissible P: 2,0"));
    assert!(s.contains("admissible N: 2,0"));
    assert!(s.contains("(4 pairs)"));

    let s = stdout(&run(&["analyze", "+"]));
    assert!(s.contains("k=0") && s.contains("admissible P: 0\n"));

    let v: serde_json::Value = serde_json::from_slice(&run(&["--format", "json", "analyze", "+-+-"]).stdout).unwrap();
    assert_eq!(v["k"], 3);
    assert_eq!(v["admissible_p"], serde_json::json!([3, 1]));

    assert_eq!(code(&run(&["analyze", "+x-"])), 2);
}

#[test]
fn construct_writes_certificates_and_uses_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let o = run(&["construct", "+-+", "--exps", "0,1,2", "--roots", "1,2", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let cert: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let c: Vec<f64> = cert["polynomial"]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    assert!((c[0] - 2.0).abs() < 1e-12 && (c[1] + 3.0).abs() < 1e-12 && (c[2] - 1.0).abs() < 1e-12);

    let o = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("roots verified"));

    assert_eq!(code(&run(&["construct", "+-+", "--exps", "0,1,2", "--roots", "1"])), 3);

    let o = run(&["construct", "+-+-", "--exps", "0,1,2,3", "--roots", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("sign sequence +-+-"));
    assert!(stdout(&o).contains("epsilon 0.5"));
}

#[test]
fn construct_defaults_to_the_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_descartes"))
        .args(["construct", "+-", "--exps", "0,1", "--roots", "3"])
        .env("DESCARTES_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("witness_pm.json").exists());
}

#[test]
fn trinomial_verdicts() {
    let o = run(&["trinomial", "1", "0", "-1", "1", "1", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("positive_on_axis\n"));
    assert!(stdout(&run(&["trinomial", "2", "0", "-3", "1", "1", "2"])).starts_with("two_simple_roots"));
    let s = stdout(&run(&["trinomial", "4", "0", "-4", "1", "1", "2"]));
    assert!(s.starts_with("double_root") && s.contains("x = 2"), "{s}");
    assert!(stdout(&run(&["trinomial", "1", "0", "-2", "0.5", "1", "1"])).starts_with("double_root"));
    assert_eq!(code(&run(&["trinomial", "1", "0", "1", "1", "1", "2"])), 3);
    assert_eq!(code(&run(&["trinomial", "1", "0", "-1", "1", "1"])), 2);
}

#[test]
fn count_and_verify_rational_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("poly.json");
    fs::write(&path, r#"{"exponents":[0,1,2,3,4,5],"coefficients":["120","2","-179","4","71","-18"]}"#).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&run(&["count", p, "--axis", "both"])), "(3,0)\n");
    assert_eq!(stdout(&run(&["count", p, "--axis", "positive"])), "P=3\n");
    assert_eq!(code(&run(&["verify", p, "--pair", "3,0"])), 0);
    assert_eq!(code(&run(&["verify", p, "--pair", "1,0"])), 4);
    assert_eq!(code(&run(&["verify", p])), 2);

    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{not json").unwrap();
    assert_eq!(code(&run(&["count", bad.to_str().unwrap()])), 2);
}

#[test]
fn pn_table_formats() {
    let o = run(&["pn-table", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("2 certified impossible, 0 unknown"));

    let o = run(&["--format", "csv", "--seed", "42", "pn-table", "6"]);
    assert_eq!(code(&o), 0);
    let csv = stdout(&o);
    assert!(csv.starts_with("sequence,P,N,verdict,reference,witness\n"));
    assert_eq!(csv.lines().filter(|l| l.contains("impossible_certificate")).count(), 12);
    assert!(!csv.contains(",unknown,"));
    let again = stdout(&run(&["--format", "csv", "--seed", "42", "pn-table", "6", "--jobs", "2"]));
    assert_eq!(csv, again);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let o = run(&["--format", "json", "pn-table", "3", "--output", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["summary"]["unknown"], 0);
}
