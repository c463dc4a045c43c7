use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn moddata(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moddata")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_prints_seven_conditions() {
    let out = moddata(&["check", path(&data("su2_9_mod2.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with('(')).collect();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|l| l.contains(" pass ")));
}

#[test]
fn fusion_prints_five_matrices() {
    let out = moddata(&["fusion", path(&data("su2_4_family_0.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("N_")).count(), 5);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("  ")).collect();
    assert_eq!(rows.len(), 25);
    assert!(rows.iter().all(|r| r.split_whitespace().count() == 5));
}

#[test]
fn levels_for_cubic_shape() {
    let out = moddata(&["levels", "p=3,m=1,r=1"]);
    assert_eq!(out.status.code(), Some(0));
    let got: Vec<u64> = stdout(&out).lines().map(|l| l.parse().unwrap()).collect();
    let mut want: BTreeSet<u64> = (1..=168).filter(|n| 168 % n == 0 && n % 7 == 0).collect();
    want.extend((1..=72).filter(|n| 72 % n == 0 && n % 9 == 0));
    assert_eq!(got, want.into_iter().collect::<Vec<_>>());
}

#[test]
fn json_output_is_versioned() {
    let out = moddata(&["--json", "levels", "multiquadratic,m=2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "levels");
    assert!(v["levels"].as_array().unwrap().iter().all(|n| 240 % n.as_u64().unwrap() == 0));

    let out = moddata(&["--json", "check", path(&data("pointed_z5_m1.json"))]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["report"]["results"].as_array().unwrap().len(), 7);
}

#[test]
fn equiv_witness_and_inequivalent() {
    let out = moddata(&["equiv", path(&data("su2_4_family_0.json")), path(&data("su2_4_family_13.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let images: Vec<usize> = stdout(&out).split_whitespace().map(|x| x.parse().unwrap()).collect();
    assert_eq!(images.len(), 5);
    assert_eq!(images[0], 0);

    let out = moddata(&["equiv", path(&data("su2_9_mod2.json")), path(&data("pointed_z5_m1.json"))]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "inequivalent");
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(moddata(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(moddata(&["check", "/nonexistent/datum.json"]).status.code(), Some(2));
    assert_eq!(moddata(&["--precision", "40", "levels", "p=5,m=1,r=1"]).status.code(), Some(2));
    assert_eq!(moddata(&["levels", "p=5"]).status.code(), Some(2));
}

#[test]
fn catalog_matches_golden_files() {
    let out = moddata(&["catalog", "su24", "--index", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), std::fs::read_to_string(data("su2_4_family_6.json")).unwrap());
    let out = moddata(&["catalog", "su2-odd-mod2", "--p", "5"]);
    assert_eq!(stdout(&out), std::fs::read_to_string(data("su2_9_mod2.json")).unwrap());
    assert_eq!(moddata(&["catalog", "su2-odd-mod2", "--p", "4"]).status.code(), Some(2));
}

#[test]
fn classify_isolates_a_corrupted_file() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(data("su2_9_mod2.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["t_exponents"][2] = serde_json::json!(1);
    let bad = dir.path().join("broken.json");
    std::fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();

    let out = moddata(&["classify-rank5", path(&data("su2_9_mod2.json")), bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("su2_9_mod2") && l.contains(" pass ")));
    assert!(text.lines().any(|l| l.starts_with("broken") && l.contains(" FAIL ")));
    assert!(text.contains("admissible (ii)"));
}

#[test]
fn classify_default_catalog() {
    let out = moddata(&["--json", "classify-rank5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["report"]["data"].as_array().unwrap().len(), 18);
    assert_eq!(v["report"]["not_instantiated"], serde_json::json!(["SU(3)_4/Z_3"]));
}

#[test]
fn rep_reports_lift() {
    let out = moddata(&["rep", path(&data("su2_9_mod2.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let level: u64 = text.split_whitespace().nth(1).unwrap().trim_end_matches(',').parse().unwrap();
    assert!(level % 11 == 0 && 132 % level == 0);
    assert!(text.contains("connectivity: pass"));
    let out = moddata(&["rep", "--x", "7", "--zeta", "3", path(&data("su2_4_family_2.json"))]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("relations: pass"));
}

#[test]
fn galois_reports_case() {
    let out = moddata(&["galois", path(&data("su2_9_mod2.json"))]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("rank-5 case 4"));
}
