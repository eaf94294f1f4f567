use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn skewrs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewrs")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn config(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Build `name` into a bundle inside `dir`.
fn bundle(dir: &TempDir, name: &str) -> PathBuf {
    let out = dir.path().join(format!("{name}.bundle"));
    let o = skewrs(&["build", "--config", s(&config(name)), "--out", s(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    out
}

#[test]
fn build_prints_summary_and_writes_bundle() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("code.bundle");
    let o = skewrs(&["build", "--config", s(&config("gf4096.conf")), "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in ["n = 6", "delta = 5", "t = 2", "alpha = a", "beta = a^1023",
        "generator = x^4 + a^2103*x^3 + a^687*x^2 + a^1848*x + a^759"] {
        assert!(text.contains(line), "missing {line} in\n{text}");
    }
    let written = fs::read_to_string(&out).unwrap();
    assert!(written.contains("code.generator = x^4 + a^2103*x^3"));
}

#[test]
fn build_of_rational_code_shows_its_generator() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("r.bundle");
    let o = skewrs(&["build", "--config", s(&config("f4z.conf")), "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("generator = x^4 + ((z + a)/(z^5 + a^2*z))*x^3"));
}

#[test]
fn bad_delta_is_a_config_error_with_line_number() {
    let dir = TempDir::new().unwrap();
    let spec = dir.path().join("bad.conf");
    let text = fs::read_to_string(config("gf4096.conf")).unwrap().replace("delta = 5", "delta = 7");
    fs::write(&spec, text).unwrap();
    let o = skewrs(&["build", "--config", s(&spec)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("delta"), "{}", stderr(&o));

    fs::write(&spec, "field.kind = finite\nfield.p = 2\nbogus = 1\n").unwrap();
    let o = skewrs(&["build", "--config", s(&spec)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn tampered_bundle_is_rejected() {
    let dir = TempDir::new().unwrap();
    let b = bundle(&dir, "gf4096.conf");
    let text = fs::read_to_string(&b).unwrap().replace("code.beta = a^1023", "code.beta = a^1022");
    fs::write(&b, text).unwrap();
    let msg = dir.path().join("m.txt");
    fs::write(&msg, "1").unwrap();
    let o = skewrs(&["encode", "--config", s(&b), "--in", s(&msg)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("code.beta"), "{}", stderr(&o));
}

#[test]
fn encode_then_decode_round_trip() {
    let dir = TempDir::new().unwrap();
    let b = bundle(&dir, "gf4096.conf");
    let msg = dir.path().join("m.txt");
    let cw = dir.path().join("c.txt");
    let report = dir.path().join("r.txt");
    fs::write(&msg, "x + a\n").unwrap();
    let o = skewrs(&["encode", "--config", s(&b), "--in", s(&msg), "--out", s(&cw)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let c = fs::read_to_string(&cw).unwrap();
    assert_eq!(c.trim(), "x^5 + a^3953*x^4 + a^1333*x^3 + a^2604*x^2 + a^1596*x + a^760");

    let o = skewrs(&["decode", "--config", s(&b), "--in", s(&cw), "--out", s(&report)]);
    assert_eq!(o.status.code(), Some(0));
    let r = fs::read_to_string(&report).unwrap();
    assert!(r.contains("status = corrected\n"));
    assert!(r.contains("error = 0\n"));

    let y = dir.path().join("y.txt");
    fs::write(&y, format!("{} + a^2 + a^3 x^3", c.trim())).unwrap();
    let o = skewrs(&["decode", "--config", s(&b), "--in", s(&y)]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout(&o);
    assert!(r.contains("rho = x^2 + a^3315*x + a^1950\n"), "{r}");
    assert!(r.contains("positions = 0, 3\n"));
    assert!(r.contains("values = a^2; a^3\n"));
    assert!(r.contains("message = x + a\n"));
}

#[test]
fn decode_of_cyclotomic_received_word() {
    let dir = TempDir::new().unwrap();
    let b = bundle(&dir, "q7.conf");
    let y = dir.path().join("y.txt");
    fs::write(
        &y,
        "2x^4 + (-chi^5 - chi^3 - chi^2)x^3 + (chi^3 + 2chi + 1)x^2 + (chi^5 + chi^4 + 1)x + chi^5 - chi^2 + chi + 1",
    )
    .unwrap();
    let o = skewrs(&["decode", "--config", s(&b), "--in", s(&y)]);
    assert_eq!(o.status.code(), Some(0));
    let r = stdout(&o);
    assert!(r.contains("positions = 2\n") && r.contains("values = chi\n"), "{r}");
}

#[test]
fn uncorrectable_word_exits_with_verification_failure() {
    let dir = TempDir::new().unwrap();
    let b = bundle(&dir, "gf4096.conf");
    let y = dir.path().join("y.txt");
    fs::write(&y, "x^5 + a*x^4 + a*x^3 + a*x^2 + a*x + 1").unwrap();
    let o = skewrs(&["decode", "--config", s(&b), "--in", s(&y)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("status = failed"));
}

#[test]
fn malformed_or_long_input_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let b = bundle(&dir, "gf4096.conf");
    let y = dir.path().join("y.txt");
    fs::write(&y, "x^6 + 1").unwrap();
    assert_eq!(skewrs(&["decode", "--config", s(&b), "--in", s(&y)]).status.code(), Some(2));
    fs::write(&y, "x + + ").unwrap();
    assert_eq!(skewrs(&["decode", "--config", s(&b), "--in", s(&y)]).status.code(), Some(2));
    let missing = dir.path().join("missing.txt");
    assert_eq!(skewrs(&["encode", "--config", s(&b), "--in", s(&missing)]).status.code(), Some(2));
    assert_eq!(skewrs(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(skewrs(&["paper-example", "4"]).status.code(), Some(2));
}

#[test]
fn simulate_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let b = bundle(&dir, "gf4096.conf");
    let args = ["simulate", "--config", s(&b), "--trials", "600", "--weights", "0-2", "--seed", "5"];
    let first = skewrs(&args);
    let second = skewrs(&args);
    assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
    let strip = |o: &Output| stdout(o).lines().filter(|l| !l.starts_with("wall_time")).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&first), strip(&second));
    let text = stdout(&first);
    assert!(text.contains("trials = 600\nsuccesses = 600\nfailures = 0\n"), "{text}");
    assert!(text.contains("weight 0: trials = 200, successes = 200"));
    assert!(text.contains("weight 1: trials = 200, successes = 200, detected_failures = 0, miscorrections = 0, echelon_branch = 0"));

    let o = skewrs(&["simulate", "--config", s(&b), "--weights", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn worked_examples_pass() {
    for which in ["1", "2", "3"] {
        let o = skewrs(&["paper-example", which]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(!stdout(&o).contains("[FAIL]"));
        assert!(stdout(&o).contains("result: PASS"));
    }
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("t.txt");
    let o = skewrs(&["paper-example", "1", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap().matches("result: PASS").count(), 2);
}

#[test]
fn oracle_verdicts() {
    let dir = TempDir::new().unwrap();
    let b = bundle(&dir, "gf16.conf");
    let o = skewrs(&["oracle", "--config", s(&b), "--budget", "100000"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("min_distance = 3\n") && text.contains("disagreements = 0\n"), "{text}");
    assert!(text.contains("scanned = 65536\n"));

    let b8 = bundle(&dir, "gf8.conf");
    let o = skewrs(&["oracle", "--config", s(&b8)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("min_distance = 3\n"));

    assert_eq!(skewrs(&["oracle", "--config", s(&b), "--budget", "10"]).status.code(), Some(2));
    let r = bundle(&dir, "f4z.conf");
    let o = skewrs(&["oracle", "--config", s(&r)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("declined"));
}
