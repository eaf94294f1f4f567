//! One pass/fail line per acceptance criterion. Exits non-zero if any fail.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use skewrs::config::CodeSpec;
use skewrs::harness::examples::{self, f4z_code, gf4096_code, q7_code, Transcript};
use skewrs::harness::identities::check_identities;
use skewrs::harness::oracle::decoder_agreement;
use skewrs::harness::simulate::simulate;
use skewrs::{linalg, AnyCode, FiniteCode, SkewField, SkewRsCode};

struct Outcome {
    passed: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn secs(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

fn transcript_within(t: &Transcript, limit: Option<Duration>) -> Outcome {
    let fast = limit.is_none_or(|l| t.elapsed < l);
    let failed: Vec<&str> = t.failed_checks().map(|c| c.label.as_str()).collect();
    let mut detail = format!("{}/{} checks exact, {}", t.checks.len() - failed.len(), t.checks.len(), secs(t.elapsed));
    if let Some(l) = limit {
        detail.push_str(&format!(" (limit {})", secs(l)));
    }
    if !failed.is_empty() {
        detail.push_str(&format!("; mismatched: {}", failed.join(", ")));
    }
    outcome(t.passed() && fast, detail)
}

fn finite_config(name: &str) -> FiniteCode {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name);
    let text = std::fs::read_to_string(&path).expect("shipped config");
    match CodeSpec::parse(&text).and_then(|s| s.build()).expect("valid config") {
        AnyCode::Finite(code) => code,
        _ => panic!("{name} is not a finite-field code"),
    }
}

fn criterion_1() -> Outcome {
    transcript_within(&examples::finite_field_direct(), Some(Duration::from_secs(1)))
}

fn criterion_2() -> Outcome {
    transcript_within(&examples::finite_field_echelon(), None)
}

fn criterion_3() -> Outcome {
    transcript_within(&examples::rational_function(), Some(Duration::from_secs(5)))
}

fn criterion_4() -> Outcome {
    transcript_within(&examples::cyclotomic(), None)
}

fn property_run<F: SkewField>(code: &SkewRsCode<F>, seed: u64) -> (usize, usize) {
    let weights: Vec<usize> = (0..=code.capability()).collect();
    let stats = simulate(code, 1000, &weights, seed).expect("weights within n");
    (stats.successes(), stats.trials())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let runs = [
        ("GF(2^12)", property_run(&gf4096_code(), 51)),
        ("F_4(z)", property_run(&f4z_code(), 52)),
        ("Q(chi)", property_run(&q7_code(), 53)),
    ];
    let elapsed = start.elapsed();
    let all = runs.iter().all(|(_, (s, t))| s == t && *t == 1000);
    let parts: Vec<String> = runs.iter().map(|(name, (s, t))| format!("{name} {s}/{t}")).collect();
    outcome(
        all && elapsed < Duration::from_secs(60),
        format!("{}, {} (limit 60s)", parts.join(", "), secs(elapsed)),
    )
}

fn criterion_6() -> Outcome {
    let gf16 = finite_config("gf16.conf");
    let gf8 = finite_config("gf8.conf");
    let d16 = gf16.min_distance_oracle(1 << 20);
    let d8 = gf8.min_distance_oracle(1 << 20);
    let shape = (gf16.length(), gf16.dimension(), gf8.length(), gf8.dimension()) == (4, 2, 3, 1);
    outcome(
        shape && d16 == Ok(3) && d8 == Ok(3),
        format!(
            "GF(2^4) n=4 k=2: {} over 255 nonzero codewords; GF(2^3) n=3 k=1: {}",
            d16.map_or_else(|e| e.to_string(), |d| format!("distance {d}")),
            d8.map_or_else(|e| e.to_string(), |d| format!("distance {d}")),
        ),
    )
}

fn criterion_7() -> Outcome {
    let code = finite_config("gf16.conf");
    match decoder_agreement(&code, 1 << 24) {
        Ok(a) => outcome(
            a.full_space && a.scanned == 65_536 && a.disagreements == 0,
            format!(
                "scanned {} vectors ({} within radius 1 of a codeword), {} disagreements",
                a.scanned, a.inside_balls, a.disagreements
            ),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let reports = [
        ("GF(2^12)", check_identities(&gf4096_code(), 200, 81)),
        ("F_4(z)", check_identities(&f4z_code(), 200, 82)),
        ("Q(chi)", check_identities(&q7_code(), 200, 83)),
    ];
    let small = [finite_config("gf16.conf"), finite_config("gf8.conf")];
    let small_ok = small.iter().all(|c| linalg::rank(c.field(), c.evaluation_matrix()) == c.length());
    let parts: Vec<String> = reports
        .iter()
        .map(|(name, r)| {
            format!(
                "{name}: lclm = x^n-1 {}, rank N {}/{}, degree law {}/{}",
                r.conjugate_lclm_is_modulus,
                r.evaluation_rank,
                r.length,
                r.degree_law_pairs - r.degree_law_failures,
                r.degree_law_pairs
            )
        })
        .collect();
    outcome(
        reports.iter().all(|(_, r)| r.passed()) && small_ok,
        format!("{}; small codes N nonsingular {small_ok}; {}", parts.join("; "), secs(start.elapsed())),
    )
}

fn criterion_9() -> Outcome {
    let code = gf4096_code();
    let single = simulate(&code, 10_000, &[1], 91).expect("weight within n");
    let double = simulate(&code, 10_000, &[2], 92).expect("weight within n");
    let w2 = double.per_weight[&2];
    outcome(
        single.echelon_branch_count() == 0 && single.successes() == 10_000,
        format!(
            "weight 1: {} echelon of {} ({} corrected); weight 2: {} echelon of {} ({:.4}%, {} corrected)",
            single.echelon_branch_count(),
            single.trials(),
            single.successes(),
            w2.echelon_branch,
            w2.trials,
            100.0 * w2.echelon_branch as f64 / w2.trials as f64,
            w2.successes,
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("GF(2^12) example, direct branch", criterion_1),
        ("GF(2^12) example, echelon branch", criterion_2),
        ("F_4(z) example", criterion_3),
        ("Q(chi) example", criterion_4),
        ("1000 random words of weight <= t per example code", criterion_5),
        ("exhaustive minimum distance of small codes", criterion_6),
        ("decoder equals nearest-codeword search on GF(2^4)", criterion_7),
        ("algebraic identities on every backend", criterion_8),
        ("branch statistics on the GF(2^12) code", criterion_9),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let result = run();
        if !result.passed {
            failures += 1;
        }
        println!("{} criterion {}: {name}: {}", if result.passed { "PASS" } else { "FAIL" }, i + 1, result.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
