use std::path::PathBuf;

use skewrs::config::{load_bundle, CodeSpec};
use skewrs::AnyCode;

fn config(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn bundle_round_trip(name: &str) -> AnyCode {
    let spec = CodeSpec::parse(&config(name)).unwrap();
    let code = spec.build().unwrap();
    let bundle = code.bundle_text(&spec);
    let again = load_bundle(&bundle).unwrap();
    assert_eq!(again.bundle_text(&spec), bundle);
    code
}

#[test]
fn shipped_configs_build_and_round_trip() {
    for (name, n, t) in [("gf4096.conf", 6, 2), ("f4z.conf", 5, 2), ("q7.conf", 6, 2), ("gf16.conf", 4, 1), ("gf8.conf", 3, 1)] {
        let code = bundle_round_trip(name);
        assert_eq!((code.length(), code.capability()), (n, t), "{name}");
    }
}

#[test]
fn summaries_show_the_generators() {
    let code = bundle_round_trip("gf4096.conf");
    assert!(code.summary().contains("generator = x^4 + a^2103*x^3 + a^687*x^2 + a^1848*x + a^759"));
    let code = bundle_round_trip("f4z.conf");
    assert!(code.summary().contains("beta = (z + a)/(z^2 + a^2*z)"));
    let code = bundle_round_trip("q7.conf");
    assert!(code.summary().contains("beta = chi^2"));
}

#[test]
fn encode_and_decode_text() {
    let code = bundle_round_trip("gf4096.conf");
    let c = code.encode_text("x + a").unwrap();
    assert_eq!(c, "x^5 + a^3953*x^4 + a^1333*x^3 + a^2604*x^2 + a^1596*x + a^760");
    let clean = code.decode_text(&c).unwrap();
    assert!(clean.corrected);
    assert!(clean.report.contains("branch = all-zero"));
    assert!(clean.report.contains("error = 0\n"));

    let noisy = code.decode_text(&format!("{c} + a^2 + a^1367 x^3")).unwrap();
    assert!(noisy.corrected);
    assert!(noisy.report.contains("branch = echelon"));
    assert!(noisy.report.contains("positions = 0, 3"));
    assert!(noisy.report.contains("values = a^2; a^1367"));
    assert!(noisy.report.contains("message = x + a"));

    assert!(code.encode_text("x^2").is_err());
    assert!(code.decode_text("x^6").is_err());
    assert!(code.decode_text("x +* a").is_err());
}

#[test]
fn cyclotomic_received_word_decodes() {
    let code = bundle_round_trip("q7.conf");
    let y = "2x^4 + (-chi^5 - chi^3 - chi^2)x^3 + (chi^3 + 2chi + 1)x^2 + (chi^5 + chi^4 + 1)x + chi^5 - chi^2 + chi + 1";
    let out = code.decode_text(y).unwrap();
    assert!(out.corrected);
    assert!(out.report.contains("positions = 2\n"));
    assert!(out.report.contains("values = chi\n"));
    assert!(out.report.contains("message = 2\n"));
}

#[test]
fn oracle_runs_on_small_codes_and_declines_otherwise() {
    let gf16 = bundle_round_trip("gf16.conf");
    let out = gf16.oracle(1 << 20).unwrap();
    assert!(out.passed, "{}", out.text);
    assert!(out.text.contains("min_distance = 3"));
    assert!(out.text.contains("disagreements = 0"));
    assert!(gf16.oracle(100).is_err());
    assert!(bundle_round_trip("f4z.conf").oracle(u128::MAX).is_err());
    assert!(bundle_round_trip("q7.conf").oracle(u128::MAX).is_err());
}

#[test]
fn invalid_delta_is_rejected_with_its_line() {
    let text = config("gf4096.conf").replace("delta = 5", "delta = 9");
    let err = CodeSpec::parse(&text).and_then(|s| s.build()).unwrap_err();
    assert!(err.to_string().contains("delta"), "{err}");
}
