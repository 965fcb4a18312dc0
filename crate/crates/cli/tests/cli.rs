use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shifted-symfun"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_workers(args: &[&str], workers: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shifted-symfun"))
        .args(args)
        .env("SHIFTED_SYMFUN_WORKERS", workers)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

// brute-force count of weakly decreasing n-tuples with sum <= d
fn count_partitions(n: usize, d: u32) -> usize {
    fn rec(left: usize, max: u32, budget: u32) -> usize {
        if left == 0 {
            return 1;
        }
        (0..=max.min(budget)).map(|p| rec(left - 1, p, budget - p)).sum()
    }
    rec(n, d, d)
}

#[test]
fn compute_shifted_at_rational_r() {
    let o = run(&["compute", "--what", "P", "--lambda", "1,0", "--n", "2", "--r", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "m[1,0] - 1/2 m[]");
}

#[test]
fn compute_jack_symbolic() {
    let o = run(&[
        "compute",
        "--what",
        "jackP",
        "--lambda",
        "2,0",
        "--n",
        "2",
        "--symbolic",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "m[2,0] + (2/(α+1)) m[1,1]");
}

#[test]
fn compute_json_schema() {
    let o = run(&[
        "compute", "--what", "P", "--lambda", "1,0", "--n", "2", "--r", "1/2", "--output", "json",
    ]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["basis"], "m");
    assert_eq!(v["terms"][0]["key"], serde_json::json!([0, 0]));
    assert_eq!(v["terms"][0]["coeff"], "-1/2");
}

#[test]
fn non_dominant_r_is_refused() {
    let o = run(&["compute", "--what", "P", "--lambda", "1,0", "--n", "3", "--r", "-1/2"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("-1/2") && err.contains("q < n = 3"), "{err}");
}

#[test]
fn malformed_lambda_is_a_config_error() {
    let o = run(&["compute", "--what", "P", "--lambda", "1,2", "--n", "2", "--r", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["compute", "--what", "P", "--lambda", "x", "--n", "2", "--r", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "--check", "nope", "--n", "2", "--dmax", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_examples_pass() {
    for args in [
        vec![
            "verify",
            "--check",
            "eigenvalue",
            "--n",
            "2",
            "--dmax",
            "4",
            "--symbolic",
        ],
        vec![
            "verify",
            "--check",
            "extra-vanishing",
            "--n",
            "3",
            "--dmax",
            "4",
            "--r",
            "2/3",
        ],
        vec!["verify", "--check", "pieri", "--n", "2", "--dmax", "3"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let reports = json_lines(&o);
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0]["status"], "pass");
        assert_eq!(reports[0]["check"], args[2]);
    }
}

#[test]
fn verify_runs_repeated_checks_in_order() {
    let o = run(&[
        "verify",
        "--check",
        "cutoff",
        "--check",
        "vanishing",
        "--n",
        "2",
        "--dmax",
        "2",
        "--r",
        "1/3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let names: Vec<Value> = json_lines(&o).iter().map(|v| v["check"].clone()).collect();
    assert_eq!(names, vec!["cutoff", "vanishing"]);
}

#[test]
fn scan_counts_and_summary() {
    let o = run(&["scan", "--n", "2", "--dmax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    let expected = count_partitions(2, 3);
    assert_eq!(expected, 6);
    assert_eq!(lines.len(), expected + 1);
    let summary = &lines[expected]["summary"];
    assert_eq!(summary["reports"], expected);
    assert_eq!(summary["fail"], 0);
}

#[test]
fn scan_small_reports() {
    let o = run(&["scan", "--n", "2", "--dmax", "1"]);
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["lambda"], serde_json::json!([0, 0]));
    assert_eq!(lines[1]["lambda"], serde_json::json!([1, 0]));
    for report in &lines[..2] {
        assert_eq!(report["verdict"], "pass");
    }
    let a: Vec<&Value> = lines[1]["rows"].as_array().unwrap().iter().map(|r| &r["a"]).collect();
    assert_eq!(a, vec!["1", "1"]);
}

#[test]
fn strict_scan_fails_on_injected_fault() {
    let o = run(&["scan", "--n", "2", "--dmax", "1", "--strict", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["scan", "--n", "2", "--dmax", "1", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["scan", "--n", "2", "--dmax", "1", "--strict"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn output_is_independent_of_worker_count() {
    let cases: [&[&str]; 3] = [
        &["scan", "--n", "3", "--dmax", "3"],
        &["verify", "--n", "2", "--dmax", "2", "--r", "1/2"],
        &[
            "compute", "--what", "shiftedJ", "--lambda", "2,1", "--n", "3", "--output", "json",
        ],
    ];
    for args in cases {
        let one = run_with_workers(args, "1");
        let four = run_with_workers(args, "4");
        assert_eq!(one.status.code(), Some(0), "{args:?}");
        assert_eq!(one.stdout, four.stdout, "{args:?}");
        let flag = run(&[&["--workers", "3"][..], args].concat());
        assert_eq!(one.stdout, flag.stdout, "{args:?}");
    }
}
