use std::process::Command as Process;

use gvmlab_cli::{run, Command, JobConfig, Report};

fn bin() -> Process {
    let mut p = Process::new(env!("CARGO_BIN_EXE_gvmlab"));
    p.env_remove("GVMLAB_MAX_DEPTH");
    p
}

fn job(mu: &[&str], depth: usize) -> JobConfig {
    JobConfig {
        mu: mu.iter().map(|s| s.to_string()).collect(),
        depth,
        ..JobConfig::default()
    }
    .normalized(None)
    .unwrap()
}

fn run_bin(args: &[&str]) -> (i32, Option<Report>, String) {
    let out = bin().args(args).output().unwrap();
    let report = serde_json::from_slice(&out.stdout).ok();
    (
        out.status.code().unwrap(),
        report,
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn simplicity_case_two() {
    let r = run(Command::Simplicity, &job(&["0", "0"], 3)).unwrap();
    let v = r.verdict.unwrap();
    assert!(!v.simple && v.case2 && !v.case1);
    assert_eq!(v.predicted, vec![vec![0, 1]]);
}

#[test]
fn simplicity_with_confirmation() {
    let (code, report, _) = run_bin(&["simplicity", "--mu=-1,-1/2", "--confirm"]);
    assert_eq!(code, 0);
    let r = report.unwrap();
    let v = r.verdict.unwrap();
    assert!(v.case1 && !v.simple);
    assert_eq!(v.agreement, Some(true));
    assert_eq!(r.lines.len(), 1);
    assert_eq!(r.lines[0].leading, vec![1, 0]);
}

#[test]
fn simple_weight_verdict() {
    let r = run(Command::Simplicity, &job(&["-1/2", "-1/3"], 3)).unwrap();
    assert!(r.verdict.unwrap().simple);
}

#[test]
fn search_rank_three() {
    let r = run(Command::Search, &job(&["2", "2", "0"], 2)).unwrap();
    assert!(r.passed);
    assert_eq!(r.lines.len(), 1);
    assert_eq!(r.lines[0].leading, vec![0, 0, 1]);
}

#[test]
fn search_structural_checks_pass() {
    let r = run(Command::Search, &job(&["0", "0"], 3)).unwrap();
    assert_eq!(r.lines[0].leading, vec![0, 1]);
    assert!(!r.checks.is_empty() && r.checks.iter().all(|c| c.passed));
}

#[test]
fn search_empty_says_so() {
    let r = run(Command::Search, &job(&["-1/2", "-1/3"], 3)).unwrap();
    assert!(r.lines.is_empty() && r.passed);
    assert_eq!(
        r.notes,
        vec!["no singular vectors up to depth 3".to_string()]
    );
}

#[test]
fn verify_full_suite_and_filter() {
    let r = run(Command::Verify, &job(&["1", "0"], 2)).unwrap();
    assert!(r.passed, "{r:?}");
    let filtered = run(
        Command::Verify,
        &JobConfig {
            suite: Some("band".into()),
            ..job(&["3", "1", "1"], 2)
        },
    )
    .unwrap();
    assert!(filtered.passed);
    assert!(filtered.checks.iter().all(|c| c.name.starts_with("band")));
}

#[test]
fn iso_command() {
    let (code, report, _) = run_bin(&["iso", "--mu-w", "1,0", "--lambda", "1,2", "--depth", "4"]);
    assert_eq!(code, 0);
    let r = report.unwrap();
    assert!(r.passed);
    assert_eq!(
        r.checks
            .iter()
            .filter(|c| c.name.starts_with("isomorphism"))
            .count(),
        8
    );
    assert!(!r.verdict.unwrap().simple);
}

#[test]
fn iso_needs_lambda() {
    let (code, _, err) = run_bin(&["iso", "--mu-w", "1,0"]);
    assert_eq!(code, 2);
    assert!(err.contains("lambda"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = run_bin(&["simplicity", "--m", "3", "--mu", "0,0"]);
    assert_eq!(code, 2);
    assert!(err.contains("mu"), "{err}");
    let (code, _, err) = run_bin(&["simplicity", "--mu", "1,2,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("two-block"), "{err}");
}

#[test]
fn depth_cap_from_environment() {
    let out = bin()
        .env("GVMLAB_MAX_DEPTH", "2")
        .args(["search", "--mu", "0,0", "--depth", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn truncated_report_does_not_pass() {
    let mut r = run(Command::Verify, &job(&["1", "0"], 1)).unwrap();
    assert!(r.passed && r.truncated.is_none());
    r.mark_truncated("weight space beyond the cutoff".into());
    assert!(!r.passed);
    let back: Report = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(
        back.truncated.as_deref(),
        Some("weight space beyond the cutoff")
    );
}

#[test]
fn echoed_config_reproduces_the_run() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("first.json");
    let (code, _, _) = run_bin(&[
        "search",
        "--mu=-1,-1/2",
        "--depth",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let first: Report = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();

    let cfg = dir.path().join("job.toml");
    std::fs::write(&cfg, first.config.to_toml()).unwrap();
    let (code, second, _) = run_bin(&["search", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 0);
    let mut second = second.unwrap();
    second.timing_ms = first.timing_ms;
    assert_eq!(second, first);
}

#[test]
fn json_config_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("job.json");
    std::fs::write(&cfg, r#"{"mu": ["0", "0"], "depth": 2}"#).unwrap();
    let (code, report, _) = run_bin(&["simplicity", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(report.unwrap().verdict.unwrap().case2);
}
