use std::time::Duration;

use skewrs::harness::examples::{self, Check, Transcript};

fn assert_passes(t: &Transcript) {
    assert!(t.passed(), "{}", t.render());
    assert!(t.checks.len() >= 15);
}

#[test]
fn gf4096_direct_branch() {
    assert_passes(&examples::finite_field_direct());
}

#[test]
fn gf4096_echelon_branch() {
    assert_passes(&examples::finite_field_echelon());
}

#[test]
fn rational_function_field() {
    assert_passes(&examples::rational_function());
}

#[test]
fn cyclotomic_field() {
    assert_passes(&examples::cyclotomic());
}

#[test]
fn run_selects_examples() {
    assert_eq!(examples::run(1).unwrap().len(), 2);
    assert_eq!(examples::run(2).unwrap().len(), 1);
    assert_eq!(examples::run(3).unwrap().len(), 1);
    assert!(examples::run(0).is_none());
    assert!(examples::run(4).is_none());
}

#[test]
fn mismatches_are_rendered_with_both_values() {
    let t = Transcript {
        title: "demo".into(),
        checks: vec![
            Check { label: "good".into(), expected: "1".into(), actual: "1".into(), passed: true },
            Check { label: "bad".into(), expected: "a^2".into(), actual: "a^3".into(), passed: false },
        ],
        elapsed: Duration::from_millis(5),
    };
    assert!(!t.passed());
    let text = t.render();
    assert!(text.contains("[ok]   good"));
    assert!(text.contains("[FAIL] bad"));
    assert!(text.contains("expected: a^2"));
    assert!(text.contains("actual:   a^3"));
    assert!(text.contains("result: FAIL (1/2 checks"));
    assert_eq!(t.failed_checks().count(), 1);
}
