// Copyright 2026 The dephasing Authors
// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dephasing")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

/// Data rows of a sweep or table CSV (schema line and header stripped).
fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines().skip(2).map(|l| l.split(',').map(str::to_string).collect()).collect()
}

#[test]
fn eval_lambda_at_origin_is_one() {
    let out = run(&["eval", "rtn", "--a", "0.05", "--gamma", "0.001", "--t", "0", "--facet", "lambda"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim().parse::<f64>().unwrap(), 1.0);
}

#[test]
fn eval_nmd_rate_past_the_root_is_negative() {
    let out = run(&["eval", "nmd", "--alpha", "0.5", "--p", "0.45", "--facet", "rate"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).trim().parse::<f64>().unwrap() < 0.0);
}

#[test]
fn eval_at_the_singularity_exits_3() {
    let out = run(&["eval", "nmd", "--alpha", "0.7", "--p", "0.34238888459044975", "--facet", "rate"]);
    assert_eq!(code(&out), 3);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("singular") && err.contains("0.342388"), "{err}");

    // six digits of the root land about 2.7e-5 away, outside the 1e-9 guard
    let near = run(&["eval", "nmd", "--alpha", "0.7", "--p", "0.342416", "--facet", "rate"]);
    assert_eq!(code(&near), 0);
    let v: f64 = stdout(&near).trim().parse().unwrap();
    assert!(v < -1e4, "{v}");

    let rtn = run(&["eval", "rtn", "--a", "1", "--gamma", "1", "--t", "1.2091995761561454", "--facet", "rate"]);
    assert_eq!(code(&rtn), 3);
}

#[test]
fn usage_and_domain_errors_exit_2() {
    for args in [
        &["eval", "rtn", "--a", "0.05", "--gamma", "1", "--t", "1", "--facet", "entropy"][..],
        &["eval", "rtn", "--a", "0.05", "--t", "1", "--facet", "rate"],
        &["eval", "rtn", "--a", "0.05", "--gamma", "1", "--p", "0.1", "--facet", "rate"],
        &["eval", "nmd", "--alpha", "1.5", "--p", "0.1", "--facet", "rate"],
        &["eval", "nmd", "--alpha", "0.5", "--p", "0.7", "--facet", "rate"],
        &["eval", "rtn", "--a", "0.05", "--gamma", "1", "--t", "-1", "--facet", "lambda"],
        &["sweep", "nmd", "--alpha", "0.5", "--stop", "0.9"],
        &["sweep", "rtn", "--a", "0.05", "--gamma", "1", "--steps", "1"],
        &["sweep", "rtn", "--a", "0.05", "--gamma", "1", "--precision", "5"],
        &["figure", "8"],
        &["figure", "0"],
        &["witness", "rtn", "--a", "0.07", "--gamma", "1", "--format", "csv"],
        &["bogus"],
    ] {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
}

#[test]
fn unwritable_destination_exits_4() {
    let out =
        run(&["sweep", "rtn", "--a", "0.05", "--gamma", "1", "--steps", "2", "--out", "/nonexistent-dir/x/s.csv"]);
    assert_eq!(code(&out), 4);
    let file = tempfile::NamedTempFile::new().unwrap();
    let out = run(&["figure", "1", "--out", file.path().to_str().unwrap()]);
    assert_eq!(code(&out), 4);
}

#[test]
fn minimal_sweep_has_header_and_two_rows() {
    let out = run(&["sweep", "rtn", "--a", "0.05", "--gamma", "1", "--steps", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# schema=1"));
    assert_eq!(
        lines.next(),
        Some("abscissa,factor,rate,coherence,mixedness,beta,qfi_theta,qfi_phi,flow_theta,flow_phi,gate_fidelity,holevo,regime")
    );
    assert_eq!(rows(&text).len(), 2);
}

#[test]
fn markovian_sweep_is_markovian_everywhere() {
    let out = run(&["sweep", "rtn", "--a", "0.05", "--gamma", "1"]);
    let r = rows(&stdout(&out));
    assert_eq!(r.len(), 2000);
    assert!(r.iter().all(|row| row[12] == "Markovian"));
}

#[test]
fn nmd_sweep_flips_regime_once() {
    let out = run(&["sweep", "nmd", "--alpha", "0.5", "--theta", "pi/4"]);
    let r = rows(&stdout(&out));
    let regimes: Vec<&str> = r.iter().map(|row| row[12].as_str()).filter(|s| *s != "Boundary").collect();
    let flips = regimes.windows(2).filter(|w| w[0] != w[1]).count();
    assert_eq!(flips, 1);
    let singular: Vec<&Vec<String>> = r.iter().filter(|row| row[2] == "SINGULAR").collect();
    assert_eq!(singular.len(), 1);
    assert!((singular[0][0].parse::<f64>().unwrap() - 0.381966).abs() < 1e-6);
}

#[test]
fn sweep_json_mirrors_csv() {
    let out = run(&["sweep", "nmd", "--alpha", "0.5", "--steps", "5", "--stop", "0.5", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], 1);
    let records = doc["records"].as_array().unwrap();
    assert_eq!(records.len(), 6);
    let singular: Vec<&serde_json::Value> = records.iter().filter(|r| r["rate"] == "SINGULAR").collect();
    assert_eq!(singular.len(), 1);
    for key in [
        "abscissa",
        "factor",
        "coherence",
        "mixedness",
        "beta",
        "qfi_theta",
        "qfi_phi",
        "flow_theta",
        "flow_phi",
        "gate_fidelity",
        "holevo",
        "regime",
    ] {
        assert!(records[0].get(key).is_some(), "{key}");
    }
}

#[test]
fn figure_file_counts() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(code(&run(&["figure", "1", "--out", d])), 0);
    assert_eq!(code(&run(&["figure", "5", "--out", d])), 0);
    assert_eq!(code(&run(&["figure", "7", "--out", d, "--format", "svg"])), 0);
    let mut names: Vec<String> =
        fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(
        names,
        [
            "fig1_panel1.csv",
            "fig1_panel2.csv",
            "fig5_panel1.csv",
            "fig5_panel2.csv",
            "fig7_panel1.svg",
            "fig7_panel2.svg",
            "fig7_panel3.svg",
            "fig7_panel4.svg"
        ]
    );
    let svg = fs::read_to_string(dir.path().join("fig7_panel1.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<polyline"));
    let fig1 = fs::read_to_string(dir.path().join("fig1_panel1.csv")).unwrap();
    assert!(fig1.contains("scale=10.0"));
}

fn table(args: &[&str]) -> Vec<Vec<f64>> {
    let out = run(args);
    assert_eq!(code(&out), 0, "{args:?}");
    rows(&stdout(&out)).iter().map(|r| r.iter().map(|v| v.parse().unwrap()).collect()).collect()
}

#[test]
fn table1_rtn_oracles_agree() {
    let t = table(&[
        "table1",
        "rtn",
        "--a",
        "0.05",
        "--gamma",
        "0.001",
        "--steps",
        "200",
        "--theta-steps",
        "10",
        "--precision",
        "17",
    ]);
    assert_eq!(t.len(), 2000);
    for row in &t {
        for diff in [5, 8, 11, 14, 17] {
            assert!(row[diff] <= 1e-10, "{row:?}");
        }
    }
}

#[test]
fn table1_nmd_alpha_zero_holevo_is_plain_binary_entropy() {
    let t = table(&["table1", "nmd", "--alpha", "0", "--steps", "101", "--precision", "17"]);
    for row in &t {
        let a = 1.0 - 2.0 * row[0] / 3.0;
        let h = |x: f64| if x > 0.0 { -x * x.log2() } else { 0.0 };
        assert!((row[15] - (h(a) + h(1.0 - a))).abs() <= 1e-10, "{row:?}");
    }
}

#[test]
fn table1_polar_state_has_no_coherence() {
    let t = table(&["table1", "rtn", "--a", "0.5", "--gamma", "1", "--theta", "0", "--steps", "50"]);
    for row in &t {
        assert_eq!(row[3], 0.0);
        assert_eq!(row[6], 0.0);
    }
}

fn witness(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert_eq!(code(&out), 0, "{args:?}");
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn witness_reports() {
    let m = witness(&["witness", "rtn", "--a", "0.07", "--gamma", "1"]);
    assert_eq!(m["verdict"], "consistent");
    assert!(m["positive_flow_intervals"].as_array().unwrap().is_empty());
    assert!(m["negative_rate_intervals"].as_array().unwrap().is_empty());

    let nm = witness(&["witness", "rtn", "--a", "0.07", "--gamma", "0.001"]);
    assert_eq!(nm["verdict"], "consistent");
    let pos = nm["positive_flow_intervals"].as_array().unwrap();
    let neg = nm["negative_rate_intervals"].as_array().unwrap();
    assert!(!pos.is_empty());
    assert_eq!(pos.len(), neg.len());

    let nmd = witness(&["witness", "nmd", "--alpha", "0.7"]);
    for key in ["positive_flow_intervals", "negative_rate_intervals"] {
        let iv = nmd[key].as_array().unwrap();
        assert_eq!(iv.len(), 1);
        assert!((iv[0]["start"].as_f64().unwrap() - 0.3424).abs() < 1e-4);
    }
}

#[test]
fn config_file_supplies_flags_and_cli_wins() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("recipe.cfg");
    fs::write(&cfg, "# Markovian recipe\na=0.05\ngamma=1\nsteps=7\ntheta=pi/2\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let out = run(&["sweep", "rtn", "--config", cfg]);
    assert_eq!(code(&out), 0);
    assert_eq!(rows(&stdout(&out)).len(), 7);
    let out = run(&["--config", cfg, "sweep", "rtn", "--steps", "3"]);
    assert_eq!(rows(&stdout(&out)).len(), 3);
    assert_eq!(code(&run(&["sweep", "rtn", "--config", "/nonexistent.cfg"])), 4);
}

#[test]
fn thread_count_does_not_change_output() {
    let base = ["sweep", "rtn", "--a", "0.07", "--gamma", "0.001", "--steps", "500"];
    let one = run(&[&["--threads", "1"][..], &base].concat());
    let four = run(&[&["--threads", "4"][..], &base].concat());
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn precision_controls_digits() {
    let v = |p: &str| {
        let out =
            run(&["eval", "rtn", "--a", "0.05", "--gamma", "1", "--t", "3", "--facet", "lambda", "--precision", p]);
        stdout(&out).trim().to_string()
    };
    assert_eq!(v("6"), "0.98755");
    assert!(v("17").len() > v("12").len());
    assert!(Path::new(env!("CARGO_BIN_EXE_dephasing")).exists());
}
