use std::fs;
use std::process::{Command, Output};

fn bihankel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bihankel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn bound_json_reports_reference_value() {
    let out = bihankel(&[
        "bound",
        "--tau",
        "1.0,0.0",
        "--lambda",
        "1",
        "--delta",
        "0",
        "--phi",
        "caratheodory",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["bound"].as_f64().unwrap() - 107.0 / 18.0).abs() < 1e-12);
    assert_eq!(v["phi"]["family"], "caratheodory");
}

#[test]
fn bound_accepts_negative_imaginary_tau() {
    let out = bihankel(&["bound", "--tau", "0.5,-0.5", "--phi", "janowski:0.5,-0.5"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("bound"));
}

#[test]
fn corollary_four_at_one() {
    let out = bihankel(&["corollary", "--id", "4", "--alpha", "1.0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["value"].as_f64().unwrap() - 107.0 / 18.0).abs() < 1e-12);
    assert!(v["abs_diff"].as_f64().unwrap() < 1e-12);
}

#[test]
fn validation_errors_exit_two() {
    for args in [
        &["bound", "--lambda", "0.5"][..],
        &["bound", "--phi", "janowski:0.5,0.7"],
        &["bound", "--tau", "0,0"],
        &["corollary", "--id", "4", "--alpha", "1.5"],
        &["corollary", "--id", "9", "--alpha", "0.5"],
        &["falsify", "--samples", "0"],
        &["falsify", "--mode", "loose"],
        &["verify-max", "--c-steps", "1"],
        &["sweep", "--config", "/nonexistent/sweep.json"],
    ] {
        let out = bihankel(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn falsify_report_is_byte_identical_across_runs_and_partitions() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, extra: &[&str]| {
        let path = dir.path().join(name);
        let mut args = vec![
            "falsify",
            "--tau",
            "0.5,0.5",
            "--lambda",
            "2",
            "--delta",
            "0.5",
            "--phi",
            "power:0.5",
            "--samples",
            "20000",
            "--seed",
            "42",
            "--mode",
            "relaxed",
            "--out",
            path.to_str().unwrap(),
        ];
        args.extend_from_slice(extra);
        let out = bihankel(&args);
        assert_eq!(out.status.code(), Some(0));
        fs::read(path).unwrap()
    };
    let a = run("a.json", &[]);
    let b = run("b.json", &[]);
    let c = run("c.json", &["--partitions", "4"]);
    assert_eq!(a, b);
    assert_eq!(a, c);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["violation_count"], 0);
    assert_eq!(v["samples_run"], 20000);
}

#[test]
fn verify_max_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("max.json");
    let out = bihankel(&[
        "verify-max",
        "--tau",
        "1",
        "--lambda",
        "1",
        "--delta",
        "0",
        "--phi",
        "caratheodory",
        "--c-steps",
        "11",
        "--grid",
        "21",
        "--refine",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&fs::read(path).unwrap()).unwrap();
    assert_eq!(v["records"].as_array().unwrap().len(), 11);
    assert_eq!(v["flagged_count"], 0);
}

#[test]
fn sweep_writes_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.json");
    fs::write(&config, r#"{"tau": [[1.0, 0.0]], "lambda": [1.0, 2.0], "delta": [0.0], "phi": ["caratheodory"], "samples": 500}"#).unwrap();
    let csv = dir.path().join("results.csv");
    let out = bihankel(&[
        "sweep",
        "--config",
        config.to_str().unwrap(),
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text
        .lines()
        .next()
        .unwrap()
        .starts_with("index,tau_re,tau_im"));

    let json = dir.path().join("results.json");
    let out = bihankel(&[
        "sweep",
        "--config",
        config.to_str().unwrap(),
        "--out",
        json.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&fs::read(json).unwrap()).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!((rows[0]["bound"].as_f64().unwrap() - 107.0 / 18.0).abs() < 1e-12);
    assert_eq!(rows[1]["lambda"], 2.0);
}

#[test]
fn sweep_with_unknown_field_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.json");
    fs::write(&config, r#"{"tau": [[1.0, 0.0]], "lambda": [1.0], "delta": [0.0], "phi": ["caratheodory"], "sampels": 5}"#).unwrap();
    let out = bihankel(&["sweep", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
