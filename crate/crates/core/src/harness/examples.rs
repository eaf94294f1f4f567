//! Golden transcripts of three fully worked decoding examples, one per
//! field backend. Every intermediate value is compared exactly against the
//! published one.

use std::fmt::Debug;
use std::time::{Duration, Instant};

use crate::code::{is_normal, multiple_matrix, SkewRsCode};
use crate::decoder::{Branch, DecodeReport};
use crate::field::{Cyclotomic, Field, FiniteField, RationalFunctionField, SkewField};
use crate::linalg::{self, Matrix};
use crate::skew_poly::SkewPoly;
use crate::CyclotomicField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct Transcript {
    pub title: String,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl Transcript {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One line per check, with expected and actual values under failures.
    pub fn render(&self) -> String {
        let mut out = format!("== {} ==\n", self.title);
        for c in &self.checks {
            if c.passed {
                out.push_str(&format!("[ok]   {}\n", c.label));
            } else {
                out.push_str(&format!(
                    "[FAIL] {}\n       expected: {}\n       actual:   {}\n",
                    c.label, c.expected, c.actual
                ));
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        out.push_str(&format!(
            "result: {} ({}/{} checks, {})\n",
            if self.passed() { "PASS" } else { "FAIL" },
            passed,
            self.checks.len(),
            crate::dispatch::format_duration(self.elapsed),
        ));
        out
    }
}

/// Collects checks against one code.
struct Recorder<'c, F: SkewField> {
    code: &'c SkewRsCode<F>,
    checks: Vec<Check>,
}

impl<'c, F: SkewField> Recorder<'c, F> {
    fn new(code: &'c SkewRsCode<F>) -> Self {
        Recorder { code, checks: Vec::new() }
    }

    fn push(&mut self, label: &str, expected: String, actual: String, passed: bool) {
        self.checks.push(Check { label: label.to_string(), expected, actual, passed });
    }

    fn parse_all(&self, texts: &[&str]) -> Option<Vec<F::Elem>> {
        texts.iter().map(|t| self.code.field().parse(t).ok()).collect()
    }

    fn fmt_elems(&self, xs: &[F::Elem]) -> String {
        let f = self.code.field();
        format!("({})", xs.iter().map(|x| f.format(x)).collect::<Vec<_>>().join(", "))
    }

    fn elem(&mut self, label: &str, expected: &str, actual: &F::Elem) {
        let ok = self.code.field().parse(expected).is_ok_and(|e| e == *actual);
        let shown = self.code.field().format(actual);
        self.push(label, expected.to_string(), shown, ok);
    }

    fn elems(&mut self, label: &str, expected: &[&str], actual: &[F::Elem]) {
        let ok = self.parse_all(expected).is_some_and(|e| e == actual);
        let shown = self.fmt_elems(actual);
        self.push(label, format!("({})", expected.join(", ")), shown, ok);
    }

    fn poly(&mut self, label: &str, expected: &str, actual: &SkewPoly<F::Elem>) {
        let ring = self.code.ring();
        let ok = ring.parse(expected).is_ok_and(|e| e == *actual);
        self.push(label, expected.to_string(), ring.format(actual), ok);
    }

    fn word(&mut self, label: &str, expected: &str, actual: &[F::Elem]) {
        let poly = self.code.from_vector(actual);
        self.poly(label, expected, &poly);
    }

    fn matrix(&mut self, label: &str, expected: &[&[&str]], actual: &Matrix<F::Elem>) {
        let parsed: Option<Vec<Vec<F::Elem>>> = expected.iter().map(|r| self.parse_all(r)).collect();
        let ok = parsed.is_some_and(|rows| {
            rows.iter().all(|r| r.len() == actual.cols()) && Matrix::from_rows(rows) == *actual
        });
        let shown_expected = format!(
            "[{}]",
            expected.iter().map(|r| format!("[{}]", r.join(", "))).collect::<Vec<_>>().join(", ")
        );
        self.push(label, shown_expected, actual.format(self.code.field()), ok);
    }

    fn value<T: Debug + PartialEq>(&mut self, label: &str, expected: T, actual: T) {
        let ok = expected == actual;
        self.push(label, format!("{expected:?}"), format!("{actual:?}"), ok);
    }

    fn finish(self, title: &str, start: Instant) -> Transcript {
        Transcript { title: title.to_string(), checks: self.checks, elapsed: start.elapsed() }
    }
}

/// Checks shared by every example after decoding.
fn check_decode<F: SkewField>(
    rec: &mut Recorder<'_, F>,
    report: &DecodeReport<F::Elem>,
    error: &[F::Elem],
    message: &str,
) {
    match &report.correction {
        Some(fix) => {
            let shown = rec.fmt_elems(&fix.error);
            let expected = rec.fmt_elems(error);
            rec.push("recovered error vector", expected, shown, fix.error == error);
            rec.poly("recovered message", message, &fix.message);
        }
        None => {
            let why = report.failure.as_ref().map_or("no correction".to_string(), |f| f.to_string());
            rec.push("decoding succeeded", "corrected".into(), why, false);
        }
    }
}

fn rows_of(m: &Matrix<impl Clone>) -> usize {
    m.rows()
}

/// Rows of `h` that are not standard basis vectors.
fn removed_rows<F: Field>(field: &F, h: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    (0..rows_of(h))
        .map(|i| h.row(i).to_vec())
        .filter(|r| linalg::canonical_index(field, r).is_none())
        .collect()
}

// ---------------------------------------------------------------------------
// GF(2^12), σ = Frob^10

const GF4096_MODULUS: &str = "a^12 + a^7 + a^6 + a^5 + a^3 + a + 1";

const GF4096_N: [[&str; 6]; 6] = [
    ["1", "1", "1", "1", "1", "1"],
    ["a^1023", "a^3327", "a^3903", "a^4047", "a^4083", "a^4092"],
    ["a^255", "a^3135", "a^3855", "a^4035", "a^4080", "a^1020"],
    ["a^63", "a^3087", "a^3843", "a^4032", "a^1008", "a^252"],
    ["a^15", "a^3075", "a^3840", "a^960", "a^240", "a^60"],
    ["a^3", "a^3072", "a^768", "a^192", "a^48", "a^12"],
];

const GF4096_CODEWORD: &str = "x^5 + a^3953 x^4 + a^1333 x^3 + a^2604 x^2 + a^1596 x + a^760";

/// The GF(2^12) code of example 1: σ = Frob^10, α = a, n = 6, δ = 5.
pub fn gf4096_code() -> SkewRsCode<FiniteField> {
    let field = FiniteField::with_modulus_text(2, Some(12), GF4096_MODULUS, "a", 10)
        .expect("fixed irreducible modulus");
    let alpha = field.generator();
    SkewRsCode::new(field, alpha, 0, 5).expect("a is normal")
}

fn as_rows<'m, const R: usize, const C: usize>(m: &'m [[&'static str; C]; R]) -> Vec<&'m [&'static str]> {
    m.iter().map(|r| r.as_slice()).collect()
}

/// Shared setup checks for the GF(2^12) code; returns y = c + e.
fn gf4096_setup(rec: &mut Recorder<'_, FiniteField>, error: &str) -> (Vec<crate::GfElem>, Vec<crate::GfElem>) {
    let code = rec.code;
    let f = code.field();
    let a = f.generator();
    rec.elem("sigma(a)", "a^1024", &f.sigma(&a));
    rec.value("order of sigma", 6, f.order());
    rec.value("alpha = a is normal", true, is_normal(f, &a));
    rec.elem("beta", "a^1023", code.beta());
    let conj: Vec<_> = (0..6).map(|j| f.sigma_pow(j, code.beta())).collect();
    rec.elems(
        "conjugates of beta",
        &["a^1023", "a^3327", "a^3903", "a^4047", "a^4083", "a^4092"],
        &conj,
    );
    rec.matrix("evaluation matrix N", &as_rows(&GF4096_N), code.evaluation_matrix());
    rec.poly("generator g", "x^4 + a^2103 x^3 + a^687 x^2 + a^1848 x + a^759", code.generator());
    let ring = code.ring();
    let m = ring.parse("x + a").expect("literal");
    let c = code.encode(&m).expect("message fits");
    rec.poly("codeword c = (x + a) g", GF4096_CODEWORD, &c);
    let c = code.to_vector(&c).expect("degree below n");
    let e = code.to_vector(&ring.parse(error).expect("literal")).expect("degree below n");
    let y = c.iter().zip(&e).map(|(p, q)| f.add(p, q)).collect();
    (y, e)
}

/// Two errors located directly from ρ.
pub fn finite_field_direct() -> Transcript {
    let start = Instant::now();
    let code = gf4096_code();
    let mut rec = Recorder::new(&code);
    let (y, e) = gf4096_setup(&mut rec, "a^2 + a^3 x^3");
    let report = code.decode(&y).expect("length n");
    rec.matrix(
        "syndrome matrix",
        &[&["a^3170", "a^2390"], &["a^2645", "a^428"], &["a^107", "a^248"]],
        &report.syndrome_matrix,
    );
    rec.matrix("column echelon form", &[&["1", "0"], &["0", "1"], &["a^1950", "a^3315"]], &report.syndrome_rcef);
    rec.value("mu", 2, report.mu);
    if let Some(rho) = &report.rho {
        rec.poly("rho", "x^2 + a^3315 x + a^1950", rho);
    }
    rec.elems(
        "rho evaluated at the beta-roots",
        &["0", "a^210", "a^2685", "0", "a^1155", "a^3945"],
        &report.rho_evaluations,
    );
    rec.value("branch", Some(Branch::Direct), report.branch);
    rec.value("positions", vec![0, 3], report.positions.clone());
    let (m, rhs) = code.error_value_system(&report.positions, &report.syndromes);
    rec.matrix("error value system", &[&["a", "a^1024"], &["a^64", "a^16"]], &m);
    rec.elems("error value right-hand side", &["a^3170", "a^2645"], &rhs);
    rec.elems("error values", &["a^2", "a^3"], &report.values);
    check_decode(&mut rec, &report, &e, "x + a");
    rec.finish("GF(2^12), sigma = Frob^10: two errors, direct branch", start)
}

/// Two errors whose syndrome matrix has rank one, located by the echelon
/// branch.
pub fn finite_field_echelon() -> Transcript {
    let start = Instant::now();
    let code = gf4096_code();
    let mut rec = Recorder::new(&code);
    let (y, e) = gf4096_setup(&mut rec, "a^2 + a^1367 x^3");
    let f = code.field();
    let report = code.decode(&y).expect("length n");
    rec.matrix(
        "syndrome matrix",
        &[&["a^59", "a^65"], &["a^1040", "a^1046"], &["a^2309", "a^2315"]],
        &report.syndrome_matrix,
    );
    rec.matrix("column echelon form", &[&["1", "0"], &["a^981", "0"], &["a^2250", "0"]], &report.syndrome_rcef);
    rec.value("mu", 1, report.mu);
    rec.elems(
        "rho evaluated at the beta-roots",
        &["a^1437", "a^1281", "a^4053", "a^9", "a^3149", "a^3853"],
        &report.rho_evaluations,
    );
    rec.value("branch", Some(Branch::Echelon), report.branch);
    if let Some(rho) = &report.rho {
        rec.poly("rho", "x + a^981", rho);
        let m_rho = multiple_matrix(f, rho);
        rec.matrix(
            "M_rho",
            &[
                &["a^981", "1", "0", "0", "0", "0"],
                &["0", "a^1269", "1", "0", "0", "0"],
                &["0", "0", "a^1341", "1", "0", "0"],
                &["0", "0", "0", "a^1359", "1", "0"],
                &["0", "0", "0", "0", "a^3411", "1"],
            ],
            &m_rho,
        );
        let n_rho = linalg::mul(f, &m_rho, code.evaluation_matrix()).expect("dimensions");
        rec.matrix(
            "N_rho = M_rho N",
            &[
                &["a^1437", "a^1281", "a^4053", "a^9", "a^3149", "a^3853"],
                &["a^2406", "a^576", "a^1845", "a^978", "a^1799", "a^1984"],
                &["a^3672", "a^3471", "a^1293", "a^2244", "a^3509", "a^493"],
                &["a^1941", "a^3171", "a^1155", "a^513", "a^1889", "a^1144"],
                &["a^2532", "a^3096", "a^3168", "a^1104", "a^1484", "a^283"],
            ],
            &n_rho,
        );
    }
    match &report.echelon {
        Some(h) => {
            rec.matrix(
                "H_rho",
                &[
                    &["1", "0", "0", "a^2667", "0", "0"],
                    &["0", "1", "0", "0", "0", "0"],
                    &["0", "0", "1", "0", "0", "0"],
                    &["0", "0", "0", "0", "1", "0"],
                    &["0", "0", "0", "0", "0", "1"],
                ],
                h,
            );
            let removed = Matrix::from_rows(removed_rows(f, h));
            rec.matrix("removed rows of H_rho", &[&["1", "0", "0", "a^2667", "0", "0"]], &removed);
        }
        None => rec.push("H_rho", "present".into(), "absent".into(), false),
    }
    rec.value("positions", vec![0, 3], report.positions.clone());
    let (m, rhs) = code.error_value_system(&report.positions, &report.syndromes);
    rec.matrix("error value system", &[&["a", "a^1024"], &["a^64", "a^16"]], &m);
    rec.elems("error value right-hand side", &["a^59", "a^1040"], &rhs);
    rec.elems("error values", &["a^2", "a^1367"], &report.values);
    check_decode(&mut rec, &report, &e, "x + a");
    rec.finish("GF(2^12), sigma = Frob^10: two errors, echelon branch", start)
}

// ---------------------------------------------------------------------------
// F_4(z), σ(z) = (z + a)/(z + a^2)

const F4Z_GENERATOR: &str = "x^4 + (z + a)/(z^5 + a^2 z) x^3 \
    + (a z^5 + a^2 z^4 + a z + a^2)/(z^5 + a^2 z^4 + a^2 z + a) x^2 \
    + (a^2 z^5 + z^4 + z + a)/(z^4 + a^2) x \
    + (a z^5 + a^2 z^4)/(a^2 z^5 + a^2 z^4 + a z + a)";

const F4Z_RECEIVED: &str = "x^4 + 1/(z^4 + a^2) x^3 \
    + (a z^5 + a^2 z^4 + a z + a^2)/(z^5 + a^2 z^4 + a^2 z + a) x^2 \
    + (a^2 z^6 + z^5 + z^2 + a z + 1)/(z^5 + a^2 z) x \
    + (a z^5 + a^2 z^4)/(a^2 z^5 + a^2 z^4 + a z + a)";

const F4Z_ERROR: &str = "a/(z^5 + a^2 z) x^3 + 1/(z^5 + a^2 z) x";

const F4Z_S00: &str = "(a^2 z^2 + a z + a^2)/(a^2 z^7 + a^2 z^6 + a^2 z^5 + a z^3 + a z^2 + a z)";
const F4Z_S10: &str = "(z^2 + z + a^2)/(a z^7 + a z^6 + z^3 + z^2)";
const F4Z_RHO0: &str = "(a^2 z^4 + a z^2 + z + a)/(z^4 + a z^3 + a z^2 + z)";

const F4Z_N: [[&str; 5]; 5] = [
    ["1", "1", "1", "1", "1"],
    [
        "(z + a)/(z^2 + a^2 z)",
        "(a^2 z^2 + z + a)/(a z^2 + a^2 z)",
        "z/(z^2 + a^2 z + a)",
        "(z^2 + z + 1)/(a^2 z + a^2)",
        "(z^2 + z)/(a^2 z + a)",
    ],
    [
        "(a z + a)/(z^2)",
        "(a^2 z + a)/(a z^2 + 1)",
        "(z^2 + a^2 z)/(a^2 z^2 + a^2)",
        "a^2 z^2 + z",
        "(z^2 + a^2 z + a)/(a^2 z^2 + 1)",
    ],
    [
        "a^2/(a z^2 + a^2 z)",
        "(a^2 z^2 + 1)/(z^2 + a^2 z + a)",
        "z^2/(a z + a)",
        "(a^2 z^2 + a)/(z + a^2)",
        "(a^2 z^2 + a^2)/(z^2 + a^2 z)",
    ],
    [
        "(a^2 z + a)/(z^2 + z)",
        "(a^2 z^2 + a z)/(a^2 z + 1)",
        "(z^2 + a z)/(a z^2 + a^2 z + 1)",
        "(a z^2 + z + a^2)/(a z)",
        "(a^2 z + a^2)/(z^2 + z + 1)",
    ],
];

/// The F_4(z) code of example 2: α = z, n = 5, δ = 5.
pub fn f4z_code() -> SkewRsCode<RationalFunctionField> {
    let base = FiniteField::with_modulus_text(2, Some(2), "a^2 + a + 1", "a", 0).expect("F_4");
    let a = base.generator();
    let a2 = base.mul(&a, &a);
    let field = RationalFunctionField::new(base.clone(), "z", [base.one(), a, base.one(), a2])
        .expect("Möbius map of order 5");
    let z = field.variable();
    SkewRsCode::new(field, z, 0, 5).expect("z is normal")
}

pub fn rational_function() -> Transcript {
    let start = Instant::now();
    let code = f4z_code();
    let f = code.field();
    let mut rec = Recorder::new(&code);
    rec.elem("sigma(z)", "(z + a)/(z + a^2)", &f.sigma(&f.variable()));
    rec.value("order of sigma", 5, f.order());
    rec.value("alpha = z is normal", true, is_normal(f, &f.variable()));
    rec.elem("beta", "(z + a)/(z^2 + a^2 z)", code.beta());
    rec.poly("generator g", F4Z_GENERATOR, code.generator());
    rec.matrix("evaluation matrix N", &as_rows(&F4Z_N), code.evaluation_matrix());

    let ring = code.ring();
    let e = code.to_vector(&ring.parse(F4Z_ERROR).expect("literal")).expect("degree below n");
    let g = code.to_vector(code.generator()).expect("degree below n");
    let y: Vec<_> = g.iter().zip(&e).map(|(p, q)| f.add(p, q)).collect();
    rec.word("received y = g + e", F4Z_RECEIVED, &y);

    let report = code.decode(&y).expect("length n");
    rec.matrix(
        "syndrome matrix",
        &[
            &[
                F4Z_S00,
                "(a z^7 + a^2 z^6 + a^2 z^5 + a z^4 + a z^3 + a^2 z^2 + a^2 z + a)/(z^3 + a z^2 + a z + a^2)",
            ],
            &[F4Z_S10, "(a z^6 + a z^5 + z^4 + a z^2 + a z + 1)/(a z^2 + z)"],
            &[
                "(a^2 z^2 + z + a^2)/(a z^6 + a^2 z^5 + z^2 + a z)",
                "(a z^7 + z^6 + z^5 + a z^4 + a z^3 + z^2 + z + a)/(a^2 z^2 + a^2 z + a^2)",
            ],
        ],
        &report.syndrome_matrix,
    );
    rec.matrix(
        "column echelon form",
        &[&["1", "0"], &[F4Z_RHO0, "0"], &["(a z^3 + a z^2 + 1)/(z^2 + a^2 z + 1)", "0"]],
        &report.syndrome_rcef,
    );
    rec.value("mu", 1, report.mu);
    let zeros = report.rho_evaluations.iter().filter(|x| f.is_zero(x)).count();
    rec.value("zero coordinates of rho evaluated at the beta-roots", 0, zeros);
    rec.value("branch", Some(Branch::Echelon), report.branch);
    if let Some(rho) = &report.rho {
        rec.poly("rho", &format!("x + {F4Z_RHO0}"), rho);
        rec.matrix(
            "M_rho",
            &[
                &[F4Z_RHO0, "1", "0", "0", "0"],
                &["0", "(a z^4 + z^3 + z^2 + a z)/(a^2 z^3 + a z^2 + a^2 z + a^2)", "1", "0", "0"],
                &["0", "0", "(a^2 z^3 + a z^2 + a)/(z^4 + z^2 + a^2 z + a^2)", "1", "0"],
                &["0", "0", "0", "(a^2 z^4 + a^2 z^3 + a^2 z^2 + a z + 1)/(a^2 z^3 + a^2 z^2 + z)", "1"],
            ],
            &multiple_matrix(f, rho),
        );
    }
    let removed_row: &[&str] = &["0", "1", "0", "(a z^2 + 1)/(z + a^2)", "0"];
    match &report.echelon {
        Some(h) => {
            rec.matrix(
                "H_rho",
                &[&["1", "0", "0", "0", "0"], removed_row, &["0", "0", "1", "0", "0"], &["0", "0", "0", "0", "1"]],
                h,
            );
            rec.matrix("removed rows of H_rho", &[removed_row], &Matrix::from_rows(removed_rows(f, h)));
        }
        None => rec.push("H_rho", "present".into(), "absent".into(), false),
    }
    rec.value("positions", vec![1, 3], report.positions.clone());
    let (m, rhs) = code.error_value_system(&report.positions, &report.syndromes);
    rec.matrix(
        "error value system",
        &[&["(z + a)/(z + a^2)", "(a z + a)/z"], &["a/(z + a)", "(a^2 z + a)/(z + 1)"]],
        &m,
    );
    rec.elems("error value right-hand side", &[F4Z_S00, F4Z_S10], &rhs);
    rec.elems("error values", &["1/(z^5 + a^2 z)", "a/(z^5 + a^2 z)"], &report.values);
    check_decode(&mut rec, &report, &e, "1");
    rec.finish("F_4(z), sigma(z) = (z + a)/(z + a^2): two errors, echelon branch", start)
}

// ---------------------------------------------------------------------------
// Q(χ), χ^7 = 1, σ(χ) = χ^3

const Q7_GENERATOR: &str =
    "2x^4 + (-chi^5 - chi^3 - chi^2)x^3 + (chi^3 + chi + 1)x^2 + (chi^5 + chi^4 + 1)x + chi^5 - chi^2 + chi + 1";

const Q7_RECEIVED: &str =
    "2x^4 + (-chi^5 - chi^3 - chi^2)x^3 + (chi^3 + 2chi + 1)x^2 + (chi^5 + chi^4 + 1)x + chi^5 - chi^2 + chi + 1";

const B: &str = "-chi^5 - chi^4 - chi^3 - chi^2 - chi - 1";

const Q7_N: [[&str; 6]; 6] = [
    ["1", "1", "1", "1", "1", "1"],
    ["chi^2", B, "chi^4", "chi^5", "chi", "chi^3"],
    ["chi", "chi^3", "chi^2", B, "chi^4", "chi^5"],
    ["chi^5", "chi", "chi^3", "chi^2", B, "chi^4"],
    ["chi^3", "chi^2", B, "chi^4", "chi^5", "chi"],
    ["chi^4", "chi^5", "chi", "chi^3", "chi^2", B],
];

/// The Q(χ) code of example 3: σ(χ) = χ^3, α = χ, n = 6, δ = 5.
pub fn q7_code() -> SkewRsCode<CyclotomicField> {
    let field: CyclotomicField = Cyclotomic::new(7, 3, "chi").expect("prime order");
    let chi = field.generator();
    SkewRsCode::new(field, chi, 0, 5).expect("chi is normal")
}

pub fn cyclotomic() -> Transcript {
    let start = Instant::now();
    let code = q7_code();
    let f = code.field();
    let chi = f.generator();
    let ring = code.ring();
    let mut rec = Recorder::new(&code);
    rec.elem("sigma(chi)", "chi^3", &f.sigma(&chi));
    rec.value("order of sigma", 6, f.order());
    rec.value("alpha = chi is normal", true, is_normal(f, &chi));
    rec.elem("beta", "chi^2", code.beta());

    let printed = ring.parse(Q7_GENERATOR).expect("literal");
    let scalar = f
        .div(printed.leading().expect("nonzero"), code.generator().leading().expect("nonzero"))
        .expect("nonzero");
    rec.elem("generator scalar", "2", &scalar);
    rec.poly("generator g up to a left scalar", Q7_GENERATOR, &ring.scale_left(&scalar, code.generator()));
    rec.matrix("evaluation matrix N", &as_rows(&Q7_N), code.evaluation_matrix());

    let y_poly = ring.parse(Q7_RECEIVED).expect("literal");
    rec.poly("received y - printed g", "chi x^2", &ring.sub(&y_poly, &printed));
    let y = code.to_vector(&y_poly).expect("degree below n");
    let report = code.decode(&y).expect("length n");
    rec.matrix(
        "syndrome matrix",
        &[&["chi^3", "1"], &["1", "chi^4"], &["chi^5", "chi^2"]],
        &report.syndrome_matrix,
    );
    rec.matrix("column echelon form", &[&["1", "0"], &["chi^4", "0"], &["chi^2", "0"]], &report.syndrome_rcef);
    rec.value("mu", 1, report.mu);
    if let Some(rho) = &report.rho {
        rec.poly("rho", "x - chi^4", rho);
    }
    rec.elems(
        "rho evaluated at the beta-roots",
        &[
            "-chi^4 + chi^2",
            "-chi^5 - 2chi^4 - chi^3 - chi^2 - chi - 1",
            "0",
            "chi^5 - chi^4",
            "-chi^4 + chi",
            "-chi^4 + chi^3",
        ],
        &report.rho_evaluations,
    );
    rec.value("branch", Some(Branch::Direct), report.branch);
    rec.value("positions", vec![2], report.positions.clone());
    let (m, rhs) = code.error_value_system(&report.positions, &report.syndromes);
    rec.matrix("error value system", &[&["chi^2"]], &m);
    rec.elems("error value right-hand side", &["chi^3"], &rhs);
    rec.elems("error values", &["chi"], &report.values);
    let e = code.to_vector(&ring.parse("chi x^2").expect("literal")).expect("degree below n");
    check_decode(&mut rec, &report, &e, "2");
    rec.finish("Q(chi), chi^7 = 1, sigma(chi) = chi^3: one error, direct branch", start)
}

/// Transcripts of example `which`. Example 1 has two scenarios.
pub fn run(which: u8) -> Option<Vec<Transcript>> {
    match which {
        1 => Some(vec![finite_field_direct(), finite_field_echelon()]),
        2 => Some(vec![rational_function()]),
        3 => Some(vec![cyclotomic()]),
        _ => None,
    }
}
