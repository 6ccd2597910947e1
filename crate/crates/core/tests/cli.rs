use std::process::{Command, Output};

fn gm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmodular"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_value() {
    let o = gm(&["eval", "--fn", "mu", "--a", "0.5", "--r", "0.70710678"]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - std::f64::consts::FRAC_PI_2).abs() < 1e-7);
}

#[test]
fn solve_degree_two() {
    let o = gm(&["solve", "--a", "0.5", "--p", "2", "--r", "0.70710678"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let s: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("s = "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((s - 0.1715729).abs() < 1e-7, "{text}");
    assert!(text.contains("residual") && text.contains("iterations"));
}

#[test]
fn check_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rec.csv");
    let o = gm(&[
        "check",
        "thm_1_7",
        "identity_1_3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).lines().filter(|l| !l.starts_with("  ")).count(),
        2
    );
    let csv = std::fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with("suite_id,check,inputs,sides,margin,verdict,slack,diagnostic\n"));

    let bad = gm(&["check", "thm_1_7", "--mutation", "pi_p"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(gm(&["check", "nope"]).status.code(), Some(2));
    assert_eq!(
        gm(&["check", "thm_1_9", "--grid", "margin=0.6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gm(&["check", "thm_1_7", "--grid", "r=0.1:0.9:0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gm(&["check", "thm_1_7", "--format", "xml"]).status.code(),
        Some(2)
    );
}

#[test]
fn check_all_passes() {
    let o = gm(&["check", "--all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn figure_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig1.csv");
    let o = gm(&["figure", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,thm17_upper,aq_upper,ell_k"));
    assert_eq!(lines.count(), 100);
    let j = gm(&["figure", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 199);
    assert_eq!(gm(&["figure", "7"]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    let o = gm(&["eval", "--fn", "K", "--a", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--r"));
    assert_eq!(gm(&[]).status.code(), Some(2));
    assert_eq!(gm(&["--help"]).status.code(), Some(0));
}
