//! Text forms of received words and decode reports.
//!
//! A report is a list of `key = value` lines. Element lists are separated by
//! `; ` and position lists by `, `:
//!
//! ```text
//! status = corrected
//! syndromes = a^3169; a^1621; a^3946; a^4093
//! mu = 2
//! rho = x^2 + a^3315*x + a^1950
//! branch = direct
//! positions = 0, 3
//! values = a^2; a^3
//! error = a^3*x^3 + a^2
//! codeword = x^5 + a^3953*x^4 + a^1333*x^3 + a^2604*x^2 + a^1596*x + a^760
//! message = x + a
//! ```
//!
//! A failed decode has `status = failed` and a `failure` line in place of
//! the correction.

use thiserror::Error;

use crate::code::{CodeError, SkewRsCode};
use crate::decoder::DecodeReport;
use crate::field::SkewField;
use crate::parse::ParseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Parse a polynomial of degree below n into its coefficient vector.
pub fn parse_word<F: SkewField>(code: &SkewRsCode<F>, text: &str) -> Result<Vec<F::Elem>, WordError> {
    let poly = code.ring().parse(text.trim())?;
    Ok(code.to_vector(&poly)?)
}

pub fn format_word<F: SkewField>(code: &SkewRsCode<F>, v: &[F::Elem]) -> String {
    code.ring().format(&code.from_vector(v))
}

fn join_elems<F: SkewField>(field: &F, xs: &[F::Elem]) -> String {
    xs.iter().map(|x| field.format(x)).collect::<Vec<_>>().join("; ")
}

pub fn render_report<F: SkewField>(code: &SkewRsCode<F>, report: &DecodeReport<F::Elem>) -> String {
    let field = code.field();
    let ring = code.ring();
    let mut lines = Vec::new();
    let status = if report.is_success() { "corrected" } else { "failed" };
    lines.push(format!("status = {status}"));
    lines.push(format!("syndromes = {}", join_elems(field, &report.syndromes)));
    lines.push(format!("mu = {}", report.mu));
    if let Some(rho) = &report.rho {
        lines.push(format!("rho = {}", ring.format(rho)));
    }
    if let Some(branch) = report.branch {
        lines.push(format!("branch = {branch}"));
    }
    let positions: Vec<String> = report.positions.iter().map(usize::to_string).collect();
    lines.push(format!("positions = {}", positions.join(", ")));
    lines.push(format!("values = {}", join_elems(field, &report.values)));
    if let Some(fix) = &report.correction {
        lines.push(format!("error = {}", format_word(code, &fix.error)));
        lines.push(format!("codeword = {}", format_word(code, &fix.codeword)));
        lines.push(format!("message = {}", ring.format(&fix.message)));
    }
    if let Some(failure) = &report.failure {
        lines.push(format!("failure = {failure}"));
    }
    lines.join("\n") + "\n"
}
