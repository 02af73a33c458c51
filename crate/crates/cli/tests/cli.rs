use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use num_complex::Complex64;
use sepball::criteria::Criterion;
use sepball::report::ClassificationReport;
use sepball::statefile::write_state;
use sepball::states::{ha24_matrix, maximally_mixed, sigma1, varsigma24};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepball"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn repo_states() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../states")
}

fn classify_to_json(input: &Path, dir: &TempDir) -> (Output, Option<ClassificationReport>) {
    let json = dir.path().join("report.json");
    let out = run(&["classify", "--input", path_str(input), "--json", path_str(&json)]);
    let report = std::fs::read_to_string(&json)
        .ok()
        .map(|s| ClassificationReport::from_json(&s).unwrap());
    (out, report)
}

#[test]
fn classify_sigma1() {
    let dir = TempDir::new().unwrap();
    let rho = sigma1();
    let input = write(&dir, "sigma1.state", &write_state(rho.matrix(), 2, false));
    let (out, report) = classify_to_json(&input, &dir);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("summary: abs-sep"));
    let r = report.unwrap();
    assert_eq!(r.id, "sigma1");
    assert!((r.purity - 17.0 / 50.0).abs() < 1e-12);
    assert!(!r.membership.unwrap().classic);
}

#[test]
fn classify_maximally_mixed() {
    let dir = TempDir::new().unwrap();
    let rho = maximally_mixed(2).unwrap();
    let input = write(&dir, "mm.state", &write_state(rho.matrix(), 2, false));
    let (out, report) = classify_to_json(&input, &dir);
    assert_eq!(out.status.code(), Some(0));
    let r = report.unwrap();
    assert_eq!(r.summary.as_str(), "abs-sep");
    let m = r.membership.unwrap();
    assert!(m.b1 && m.b2 && m.classic);
}

#[test]
fn classify_varsigma_is_entangled() {
    let dir = TempDir::new().unwrap();
    let rho = varsigma24(1.0).unwrap();
    let input = write(&dir, "v.state", &write_state(rho.matrix(), 4, false));
    let (out, report) = classify_to_json(&input, &dir);
    assert_eq!(out.status.code(), Some(0));
    let r = report.unwrap();
    assert_eq!(r.summary.as_str(), "entangled");
    let m = r.criterion(Criterion::BlockCoherence).unwrap().margin;
    assert!((m + 1.0 / 49.0).abs() < 1e-12, "{m}");
}

#[test]
fn classify_repository_state_files() {
    let dir = repo_states();
    let expect = [
        ("sigma1.state", "abs-sep"),
        ("maximally_mixed_2x2.state", "abs-sep"),
        ("varsigma24_a1.state", "entangled"),
        ("sigma24.state", "abs-sep"),
        ("ha24.state", "indeterminate"),
    ];
    for (file, summary) in expect {
        let out = run(&["classify", "--input", path_str(&dir.join(file))]);
        assert_eq!(out.status.code(), Some(0), "{file}: {}", stderr(&out));
        assert!(stdout(&out).contains(&format!("summary: {summary}")), "{file}");
    }
}

#[test]
fn flagged_ha24_is_classified_on_its_spectrum() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "ha.state", &write_state(&ha24_matrix(), 4, true));
    let (out, report) = classify_to_json(&input, &dir);
    assert_eq!(out.status.code(), Some(0));
    let r = report.unwrap();
    assert!(r.bounds.is_none());
    assert!(r.criteria.iter().all(|c| !c.holds()));
    assert!(r.purity_band.lower.is_infinite());
}

#[test]
fn unflagged_non_hermitian_file_exits_2() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "ha.state", &write_state(&ha24_matrix(), 4, false));
    let out = run(&["classify", "--input", path_str(&input)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not Hermitian"));
}

#[test]
fn malformed_file_reports_line_and_column() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "bad.state", "dims 2 2\n0.25,0 0,0 0,0 0,0\n0,0 0.25,0 oops 0,0\n");
    let out = run(&["classify", "--input", path_str(&input)]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("bad.state:3:12"), "{err}");
}

#[test]
fn tolerance_flag_controls_validation() {
    let dir = TempDir::new().unwrap();
    let mut m = sigma1().matrix().clone();
    m[(0, 1)] += Complex64::new(1e-7, 0.0);
    let input = write(&dir, "tilted.state", &write_state(&m, 2, false));
    let strict = run(&["classify", "--input", path_str(&input)]);
    assert_eq!(strict.status.code(), Some(2));
    let loose = run(&["classify", "--input", path_str(&input), "--tol", "1e-6"]);
    assert_eq!(loose.status.code(), Some(0), "{}", stderr(&loose));
}

#[test]
fn missing_input_exits_2() {
    let out = run(&["classify", "--input", "/definitely/not/here.state"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table1_csv_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let out = run(&["table1", "--csv", path_str(&a)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all rows agree"));
    run(&["table1", "--csv", path_str(&b)]);
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().last().unwrap().starts_with("0.5,none,none"));
}

#[test]
fn fig1_outputs() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("fig1.csv");
    let svg = dir.path().join("fig1.svg");
    let out = run(&["fig1", "--csv", path_str(&csv), "--svg", path_str(&svg)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "p,purity,b1,b2,classic,abs_sep_flag");
    assert_eq!(lines.len(), 502);
    let row: Vec<f64> = lines[301].split(',').map(|c| c.parse().unwrap()).collect();
    assert!((row[0] - 0.3).abs() < 1e-12);
    assert!((row[1] - 0.29).abs() < 1e-12);
    for l in &lines[1..] {
        let v: Vec<f64> = l.split(',').map(|c| c.parse().unwrap()).collect();
        assert!((v[3] - 0.5).abs() < 1e-12);
        if v[5] == 1.0 {
            assert!(v[1] <= v[2] + 1e-12 && v[2] <= v[3] + 1e-12, "{l}");
        }
    }
    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert!(svg_text.contains("<svg") && svg_text.contains("version=\"1.1\""));
    assert_eq!(svg_text.matches("<polyline").count(), 4);
}

#[test]
fn fig1_rejects_bad_arguments() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("f.csv");
    let out = run(&["fig1", "--csv", path_str(&csv), "--samples", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let unwritable = dir.path().join("missing-dir").join("f.csv");
    let out = run(&["fig1", "--csv", path_str(&unwritable)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_family23_reports_landmarks() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("s.csv");
    let out = run(&[
        "scan", "--family", "family23", "--range", "alpha=0:0.3:0.01", "--csv", path_str(&csv),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("[0.0909090909, 0.1666666667]"), "{text}");
    assert!(text.contains("alpha = 0.1333333333"));
    assert!(text.contains("0.019"));
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(csv_text.lines().count(), 32);
    // abs-sep summary exactly on the derived interval
    for l in csv_text.lines().skip(1) {
        let cells: Vec<&str> = l.split(',').collect();
        let alpha: f64 = cells[0].parse().unwrap();
        let abs = *cells.last().unwrap() == "abs-sep";
        let inside = (1.0 / 11.0 - 1e-6..=1.0 / 6.0 + 1e-6).contains(&alpha);
        assert_eq!(abs, inside, "alpha {alpha}");
    }
}

#[test]
fn scan_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = run(&["scan", "--family", "isotropic", "--range", "f=0:0.5:0.01", "--csv", path_str(p)]);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).contains("max b1 over grid = 0.375000000000 at f = 0.25"));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn scan_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("s.csv");
    for args in [
        vec!["scan", "--family", "isotropic", "--range", "f=0:1.5:0.5"],
        vec!["scan", "--family", "nosuch", "--range", "f=0:1:0.5"],
        vec!["scan", "--family", "isotropic", "--range", "f=0:1"],
        vec!["scan", "--family", "family23", "--range", "alpha=0:0.2:0.1", "--set", "gamma=0.1"],
    ] {
        let mut args = args.clone();
        args.extend(["--csv", path_str(&csv)]);
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn selfcheck_exit_code_matches_suite_output() {
    let out = run(&["selfcheck"]);
    let text = stdout(&out);
    assert!(text.contains("selfcheck seed 20240901"));
    let suites = text.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count();
    assert_eq!(suites, 12);
    let any_fail = text.lines().any(|l| l.starts_with("FAIL"));
    assert_eq!(out.status.code(), Some(if any_fail { 1 } else { 0 }));
    assert_eq!(run(&["selfcheck", "--seed", "7"]).status.code().map(|c| c <= 1), Some(true));
}
