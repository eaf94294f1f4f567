//! A code over any of the three backends, selected at run time.

use std::time::Duration;

use crate::code::{CodeError, SkewRsCode};
use crate::config::{CodeSpec, ConfigError};
use crate::field::{Field, FiniteField, RationalFunctionField, SkewField};
use crate::harness::oracle::{self, DecoderAgreement};
use crate::harness::simulate::{simulate, TrialStats};
use crate::report::{format_word, parse_word, render_report, WordError};
use crate::CyclotomicField;

#[derive(Clone, Debug)]
pub enum AnyCode {
    Finite(SkewRsCode<FiniteField>),
    Rational(SkewRsCode<RationalFunctionField>),
    Cyclotomic(SkewRsCode<CyclotomicField>),
}

macro_rules! with_code {
    ($self:expr, $c:ident => $body:expr) => {
        match $self {
            AnyCode::Finite($c) => $body,
            AnyCode::Rational($c) => $body,
            AnyCode::Cyclotomic($c) => $body,
        }
    };
}

/// Outcome of decoding one received word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub report: String,
    pub corrected: bool,
}

/// Outcome of the oracle suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOutcome {
    pub text: String,
    pub passed: bool,
}

fn summary_lines<F: SkewField>(code: &SkewRsCode<F>) -> Vec<(&'static str, String)> {
    let field = code.field();
    vec![
        ("code.n", code.length().to_string()),
        ("code.t", code.capability().to_string()),
        ("code.alpha", field.format(code.alpha())),
        ("code.beta", field.format(code.beta())),
        ("code.generator", code.ring().format(code.generator())),
    ]
}

impl AnyCode {
    pub fn length(&self) -> usize {
        with_code!(self, c => c.length())
    }

    pub fn capability(&self) -> usize {
        with_code!(self, c => c.capability())
    }

    /// Human-readable description of the field and code parameters.
    pub fn summary(&self) -> String {
        with_code!(self, c => {
            let f = c.field();
            let mut out = format!(
                "field = {}\nsigma = {}\nn = {}\nk = {}\ndelta = {}\nt = {}\nr = {}\n",
                f.describe(),
                f.describe_sigma(),
                c.length(),
                c.dimension(),
                c.designed_distance(),
                c.capability(),
                c.offset(),
            );
            out.push_str(&format!("alpha = {}\nbeta = {}\ngenerator = {}\n",
                f.format(c.alpha()), f.format(c.beta()), c.ring().format(c.generator())));
            out
        })
    }

    /// Derived parameters written into a bundle.
    pub fn recorded_parameters(&self) -> Vec<(&'static str, String)> {
        with_code!(self, c => summary_lines(c))
    }

    /// Compare a recorded bundle value with the rebuilt one, as elements or
    /// polynomials where applicable.
    pub fn same_value(&self, key: &str, recorded: &str, actual: &str) -> Result<bool, ConfigError> {
        let bad = |e: crate::parse::ParseError| ConfigError {
            line: None,
            message: format!("{key}: {e}"),
        };
        with_code!(self, c => match key {
            "code.alpha" | "code.beta" => {
                let f = c.field();
                Ok(f.parse(recorded).map_err(bad)? == f.parse(actual).map_err(bad)?)
            }
            "code.generator" => {
                let r = c.ring();
                Ok(r.parse(recorded).map_err(bad)? == r.parse(actual).map_err(bad)?)
            }
            _ => Ok(recorded.trim() == actual),
        })
    }

    /// The configuration (with α filled in) followed by the derived values.
    pub fn bundle_text(&self, spec: &CodeSpec) -> String {
        let mut spec = spec.clone();
        if spec.alpha.is_none() {
            spec.alpha = Some(with_code!(self, c => c.field().format(c.alpha())));
        }
        let mut out = spec.to_text();
        for (k, v) in self.recorded_parameters() {
            out.push_str(&format!("{k} = {v}\n"));
        }
        out
    }

    /// Encode a message polynomial given as text.
    pub fn encode_text(&self, message: &str) -> Result<String, WordError> {
        with_code!(self, c => {
            let m = c.ring().parse(message.trim())?;
            let cw = c.encode(&m)?;
            Ok(format_word(c, &c.to_vector(&cw)?))
        })
    }

    /// Decode a received polynomial given as text.
    pub fn decode_text(&self, received: &str) -> Result<DecodeOutcome, WordError> {
        with_code!(self, c => {
            let y = parse_word(c, received)?;
            let rep = c.decode(&y)?;
            Ok(DecodeOutcome { report: render_report(c, &rep), corrected: rep.is_success() })
        })
    }

    pub fn simulate(&self, trials: usize, weights: &[usize], seed: u64) -> Result<TrialStats, CodeError> {
        with_code!(self, c => simulate(c, trials, weights, seed))
    }

    /// Minimum distance and decoder-versus-nearest-codeword checks. Both
    /// are refused for infinite fields or when `budget` is too small.
    pub fn oracle(&self, budget: u128) -> Result<OracleOutcome, CodeError> {
        with_code!(self, c => {
            let distance = c.min_distance_oracle(budget)?;
            let agreement: DecoderAgreement = oracle::decoder_agreement(c, budget)?;
            let mds = distance == c.designed_distance();
            let text = format!(
                "min_distance = {distance}\ndesigned_distance = {}\nmds = {mds}\n{}",
                c.designed_distance(),
                agreement.render(),
            );
            Ok(OracleOutcome { text, passed: mds && agreement.disagreements == 0 })
        })
    }
}

pub(crate) fn format_duration(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}
