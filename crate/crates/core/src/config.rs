//! `key = value` code configurations and code bundle files.
//!
//! ```text
//! # GF(2^12) with σ = Frob^10
//! field.kind = finite
//! field.p = 2
//! field.degree = 12
//! field.modulus = a^12 + a^7 + a^6 + a^5 + a^3 + a + 1
//! field.generator = a
//! sigma.frobenius_power = 10
//! alpha = a
//! r = 0
//! delta = 5
//! ```
//!
//! Keys per field kind:
//!
//! | kind         | keys                                                                   |
//! |--------------|------------------------------------------------------------------------|
//! | `finite`     | `field.p`, `field.degree`, `field.modulus`?, `field.generator`?, `sigma.frobenius_power` |
//! | `rational`   | `field.p`, `field.degree`, `field.modulus`?, `field.generator`?, `field.variable`?, `sigma.mobius` |
//! | `cyclotomic` | `cyclotomic.order`, `sigma.exponent`, `field.generator`?               |
//!
//! Common keys are `alpha` (optional, a normal element is searched when
//! absent), `r` (default 0) and `delta`. Blank lines and lines starting with
//! `#` are ignored. Element values use the element grammar of the field.
//!
//! A code bundle is a configuration followed by `code.n`, `code.t`,
//! `code.alpha`, `code.beta` and `code.generator`, which are checked against
//! the rebuilt code when the bundle is loaded.

use std::collections::BTreeMap;
use std::fmt;

use crate::code::{find_normal_element, SkewRsCode, NORMAL_SEARCH_TRIALS};
use crate::dispatch::AnyCode;
use crate::field::{Cyclotomic, Field, FiniteField, RationalFunctionField, SkewField};
use crate::CyclotomicField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub line: Option<usize>,
    pub message: String,
}

impl ConfigError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ConfigError { line: Some(line), message: message.into() }
    }

    fn general(message: impl Into<String>) -> Self {
        ConfigError { line: None, message: message.into() }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSpec {
    Finite {
        p: u64,
        degree: u32,
        modulus: Option<String>,
        generator: String,
        frobenius_power: u32,
    },
    Rational {
        p: u64,
        degree: u32,
        modulus: Option<String>,
        generator: String,
        variable: String,
        mobius: [String; 4],
    },
    Cyclotomic {
        order: u64,
        exponent: u64,
        symbol: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    pub field: FieldSpec,
    pub alpha: Option<String>,
    pub r: usize,
    pub delta: usize,
}

const SPEC_KEYS: &[&str] = &[
    "field.kind",
    "field.p",
    "field.degree",
    "field.modulus",
    "field.generator",
    "field.variable",
    "sigma.frobenius_power",
    "sigma.mobius",
    "sigma.exponent",
    "cyclotomic.order",
    "alpha",
    "r",
    "delta",
];

const BUNDLE_KEYS: &[&str] = &["code.n", "code.t", "code.alpha", "code.beta", "code.generator"];

/// Entries by key, each with its 1-based line number.
type Entries = BTreeMap<String, (usize, String)>;

fn parse_entries(text: &str, allowed: &[&[&str]]) -> Result<Entries, ConfigError> {
    let mut out = Entries::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed
            .split_once('=')
            .ok_or_else(|| ConfigError::at(line, format!("expected 'key = value', found '{trimmed}'")))?;
        let key = key.trim();
        if !allowed.iter().any(|keys| keys.contains(&key)) {
            return Err(ConfigError::at(line, format!("unknown key '{key}'")));
        }
        if out.insert(key.to_string(), (line, value.trim().to_string())).is_some() {
            return Err(ConfigError::at(line, format!("duplicate key '{key}'")));
        }
    }
    Ok(out)
}

struct Reader<'e> {
    entries: &'e Entries,
}

impl Reader<'_> {
    fn text(&self, key: &str) -> Option<&(usize, String)> {
        self.entries.get(key)
    }

    fn required(&self, key: &str) -> Result<&(usize, String), ConfigError> {
        self.text(key).ok_or_else(|| ConfigError::general(format!("missing key '{key}'")))
    }

    fn number<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, ConfigError> {
        match self.text(key) {
            None => Ok(None),
            Some((line, v)) => v
                .parse()
                .map(Some)
                .map_err(|_| ConfigError::at(*line, format!("'{key}' must be a non-negative integer, found '{v}'"))),
        }
    }

    fn required_number<T: std::str::FromStr>(&self, key: &str) -> Result<T, ConfigError> {
        self.number(key)?.ok_or_else(|| ConfigError::general(format!("missing key '{key}'")))
    }

    fn reject(&self, keys: &[&str], kind: &str) -> Result<(), ConfigError> {
        for key in keys {
            if let Some((line, _)) = self.text(key) {
                return Err(ConfigError::at(*line, format!("'{key}' does not apply to field.kind = {kind}")));
            }
        }
        Ok(())
    }
}

impl CodeSpec {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        Self::from_entries(&parse_entries(text, &[SPEC_KEYS])?)
    }

    fn from_entries(entries: &Entries) -> Result<Self, ConfigError> {
        let rd = Reader { entries };
        let (kind_line, kind) = rd.required("field.kind")?;
        let generator = rd.text("field.generator").map(|(_, v)| v.clone());
        let field = match kind.as_str() {
            "finite" => {
                rd.reject(&["field.variable", "sigma.mobius", "sigma.exponent", "cyclotomic.order"], kind)?;
                FieldSpec::Finite {
                    p: rd.required_number("field.p")?,
                    degree: rd.required_number("field.degree")?,
                    modulus: rd.text("field.modulus").map(|(_, v)| v.clone()),
                    generator: generator.unwrap_or_else(|| "a".into()),
                    frobenius_power: rd.required_number("sigma.frobenius_power")?,
                }
            }
            "rational" => {
                rd.reject(&["sigma.frobenius_power", "sigma.exponent", "cyclotomic.order"], kind)?;
                let (line, text) = rd.required("sigma.mobius")?;
                let parts: Vec<String> = text.split(',').map(|s| s.trim().to_string()).collect();
                let mobius: [String; 4] = parts.try_into().map_err(|_| {
                    ConfigError::at(*line, "'sigma.mobius' needs four comma-separated coefficients a, b, c, d")
                })?;
                FieldSpec::Rational {
                    p: rd.required_number("field.p")?,
                    degree: rd.required_number("field.degree")?,
                    modulus: rd.text("field.modulus").map(|(_, v)| v.clone()),
                    generator: generator.unwrap_or_else(|| "a".into()),
                    variable: rd.text("field.variable").map_or_else(|| "z".into(), |(_, v)| v.clone()),
                    mobius,
                }
            }
            "cyclotomic" => {
                rd.reject(
                    &["field.p", "field.degree", "field.modulus", "field.variable", "sigma.frobenius_power", "sigma.mobius"],
                    kind,
                )?;
                FieldSpec::Cyclotomic {
                    order: rd.required_number("cyclotomic.order")?,
                    exponent: rd.required_number("sigma.exponent")?,
                    symbol: generator.unwrap_or_else(|| "chi".into()),
                }
            }
            other => {
                return Err(ConfigError::at(
                    *kind_line,
                    format!("field.kind must be finite, rational or cyclotomic, found '{other}'"),
                ))
            }
        };
        Ok(CodeSpec {
            field,
            alpha: rd.text("alpha").map(|(_, v)| v.clone()),
            r: rd.number("r")?.unwrap_or(0),
            delta: rd.required_number("delta")?,
        })
    }

    /// Canonical text form, accepted by [`CodeSpec::parse`].
    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        match &self.field {
            FieldSpec::Finite { p, degree, modulus, generator, frobenius_power } => {
                lines.push("field.kind = finite".to_string());
                lines.push(format!("field.p = {p}"));
                lines.push(format!("field.degree = {degree}"));
                if let Some(m) = modulus {
                    lines.push(format!("field.modulus = {m}"));
                }
                lines.push(format!("field.generator = {generator}"));
                lines.push(format!("sigma.frobenius_power = {frobenius_power}"));
            }
            FieldSpec::Rational { p, degree, modulus, generator, variable, mobius } => {
                lines.push("field.kind = rational".to_string());
                lines.push(format!("field.p = {p}"));
                lines.push(format!("field.degree = {degree}"));
                if let Some(m) = modulus {
                    lines.push(format!("field.modulus = {m}"));
                }
                lines.push(format!("field.generator = {generator}"));
                lines.push(format!("field.variable = {variable}"));
                lines.push(format!("sigma.mobius = {}", mobius.join(", ")));
            }
            FieldSpec::Cyclotomic { order, exponent, symbol } => {
                lines.push("field.kind = cyclotomic".to_string());
                lines.push(format!("cyclotomic.order = {order}"));
                lines.push(format!("field.generator = {symbol}"));
                lines.push(format!("sigma.exponent = {exponent}"));
            }
        }
        if let Some(a) = &self.alpha {
            lines.push(format!("alpha = {a}"));
        }
        lines.push(format!("r = {}", self.r));
        lines.push(format!("delta = {}", self.delta));
        lines.join("\n") + "\n"
    }

    fn build_finite(
        p: u64,
        degree: u32,
        modulus: &Option<String>,
        generator: &str,
        frobenius_power: u32,
    ) -> Result<FiniteField, ConfigError> {
        let field = match modulus {
            Some(m) => FiniteField::with_modulus_text(p, Some(degree), m, generator, frobenius_power),
            None => FiniteField::new(p, degree, None, generator, frobenius_power),
        };
        field.map_err(|e| ConfigError::general(format!("field: {e}")))
    }

    /// Construct the field and the code.
    pub fn build(&self) -> Result<AnyCode, ConfigError> {
        match &self.field {
            FieldSpec::Finite { p, degree, modulus, generator, frobenius_power } => {
                let field = Self::build_finite(*p, *degree, modulus, generator, *frobenius_power)?;
                self.finish(field).map(AnyCode::Finite)
            }
            FieldSpec::Rational { p, degree, modulus, generator, variable, mobius } => {
                let base = Self::build_finite(*p, *degree, modulus, generator, 0)?;
                let mut coeffs = [base.zero(); 4];
                for (slot, text) in coeffs.iter_mut().zip(mobius) {
                    *slot = base
                        .parse(text)
                        .map_err(|e| ConfigError::general(format!("sigma.mobius: {e}")))?;
                }
                let field = RationalFunctionField::new(base, variable, coeffs)
                    .map_err(|e| ConfigError::general(format!("field: {e}")))?;
                self.finish(field).map(AnyCode::Rational)
            }
            FieldSpec::Cyclotomic { order, exponent, symbol } => {
                if symbol == "x" {
                    return Err(ConfigError::general("field.generator 'x' clashes with the polynomial variable"));
                }
                let field: CyclotomicField = Cyclotomic::new(*order, *exponent, symbol)
                    .map_err(|e| ConfigError::general(format!("field: {e}")))?;
                self.finish(field).map(AnyCode::Cyclotomic)
            }
        }
    }

    fn finish<F: SkewField>(&self, field: F) -> Result<SkewRsCode<F>, ConfigError> {
        let alpha = match &self.alpha {
            Some(text) => field.parse(text).map_err(|e| ConfigError::general(format!("alpha: {e}")))?,
            None => find_normal_element(&field, NORMAL_SEARCH_TRIALS, 0)
                .map_err(|e| ConfigError::general(e.to_string()))?,
        };
        SkewRsCode::new(field, alpha, self.r, self.delta).map_err(|e| ConfigError::general(e.to_string()))
    }
}

/// Load a bundle written by [`AnyCode::bundle_text`] and check its recorded
/// parameters against the rebuilt code.
pub fn load_bundle(text: &str) -> Result<AnyCode, ConfigError> {
    let entries = parse_entries(text, &[SPEC_KEYS, BUNDLE_KEYS])?;
    let spec_entries: Entries =
        entries.iter().filter(|(k, _)| !k.starts_with("code.")).map(|(k, v)| (k.clone(), v.clone())).collect();
    let code = CodeSpec::from_entries(&spec_entries)?.build()?;
    let recorded = code.recorded_parameters();
    for (key, actual) in recorded {
        if let Some((line, value)) = entries.get(key) {
            if !code.same_value(key, value, &actual)? {
                return Err(ConfigError::at(
                    *line,
                    format!("'{key}' is {value} but the rebuilt code has {actual}"),
                ));
            }
        }
    }
    Ok(code)
}
