//! Recursive-descent parser for element and polynomial expressions.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr    := ['+' | '-'] term (('+' | '-') term)*
//! term    := unary (['*' | '/'] unary)*        juxtaposition multiplies
//! unary   := '-' unary | power
//! power   := primary ['^' exponent]
//! exponent:= ['-'] integer | '(' ['-'] integer ')'
//! primary := integer | symbol | '(' expr ')'
//! ```
//!
//! `{ }` may be used in place of `( )`, so `a^{2103}x^3` parses. What a symbol
//! or an integer denotes is decided by the [`Algebra`] being evaluated into.

use std::fmt;

use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnknownSymbol(String),
    NumberTooLarge,
    DivisionByZero,
    Unsupported(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character '{c}'"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected {t}"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::UnknownSymbol(s) => write!(f, "unknown symbol '{s}'"),
            ParseErrorKind::NumberTooLarge => write!(f, "integer literal too large"),
            ParseErrorKind::DivisionByZero => write!(f, "division by zero"),
            ParseErrorKind::Unsupported(s) => write!(f, "{s}"),
        }
    }
}

/// A syntax or evaluation error, `position` is a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

/// Failure of an algebra operation during evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    DivisionByZero,
    Unsupported(String),
}

impl From<String> for EvalError {
    fn from(s: String) -> Self {
        if s == "division by zero" {
            EvalError::DivisionByZero
        } else {
            EvalError::Unsupported(s)
        }
    }
}

impl From<&str> for EvalError {
    fn from(s: &str) -> Self {
        EvalError::from(s.to_string())
    }
}

/// The target of evaluation: a set of values with ring operations.
pub trait Algebra {
    type Value: Clone;

    fn integer(&self, n: i64) -> Result<Self::Value, String>;
    fn symbol(&self, name: &str) -> Option<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, String>;
    fn pow(&self, a: &Self::Value, e: i64) -> Result<Self::Value, String>;
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {n}"),
            Tok::Ident(s) => format!("symbol '{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Open => "'('".into(),
            Tok::Close => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut value: i64 = 0;
            while let Some(&(_, d)) = chars.peek() {
                let Some(digit) = d.to_digit(10) else { break };
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(digit as i64))
                    .ok_or(ParseError { kind: ParseErrorKind::NumberTooLarge, position: pos })?;
                chars.next();
            }
            out.push((Tok::Num(value), pos));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if d.is_alphanumeric() || d == '_' {
                    name.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push((Tok::Ident(name), pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' | '{' => Tok::Open,
            ')' | '}' => Tok::Close,
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(other),
                    position: pos,
                })
            }
        };
        out.push((tok, pos));
        chars.next();
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a, A: Algebra> {
    algebra: &'a A,
    toks: Vec<(Tok, usize)>,
    idx: usize,
}

impl<A: Algebra> Parser<'_, A> {
    fn peek(&self) -> &Tok {
        &self.toks[self.idx].0
    }

    fn pos(&self) -> usize {
        self.toks[self.idx].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.idx].0.clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    fn unexpected(&self) -> ParseError {
        let kind = match self.peek() {
            Tok::End => ParseErrorKind::UnexpectedEnd,
            t => ParseErrorKind::UnexpectedToken(t.describe()),
        };
        ParseError { kind, position: self.pos() }
    }

    fn eval_err(&self, e: String, position: usize) -> ParseError {
        let kind = match EvalError::from(e) {
            EvalError::DivisionByZero => ParseErrorKind::DivisionByZero,
            EvalError::Unsupported(s) => ParseErrorKind::Unsupported(s),
        };
        ParseError { kind, position }
    }

    fn expr(&mut self) -> Result<A::Value, ParseError> {
        let mut acc = match self.peek() {
            Tok::Minus => {
                self.bump();
                let t = self.term()?;
                self.algebra.neg(&t)
            }
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.algebra.add(&acc, &t);
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.algebra.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<A::Value, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let f = self.unary()?;
                    acc = self.algebra.mul(&acc, &f);
                }
                Tok::Slash => {
                    let at = self.pos();
                    self.bump();
                    let f = self.unary()?;
                    acc = self.algebra.div(&acc, &f).map_err(|e| self.eval_err(e, at))?;
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::Open => {
                    let f = self.unary()?;
                    acc = self.algebra.mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<A::Value, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            let v = self.unary()?;
            return Ok(self.algebra.neg(&v));
        }
        self.power()
    }

    fn power(&mut self) -> Result<A::Value, ParseError> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let at = self.pos();
        self.bump();
        let e = self.exponent()?;
        self.algebra.pow(&base, e).map_err(|err| self.eval_err(err, at))
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let grouped = *self.peek() == Tok::Open;
        if grouped {
            self.bump();
        }
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let value = match self.peek() {
            Tok::Num(n) => *n,
            _ => return Err(self.unexpected()),
        };
        self.bump();
        if grouped {
            if *self.peek() != Tok::Close {
                return Err(self.unexpected());
            }
            self.bump();
        }
        Ok(if negative { -value } else { value })
    }

    fn primary(&mut self) -> Result<A::Value, ParseError> {
        let at = self.pos();
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                self.algebra.integer(n).map_err(|e| self.eval_err(e, at))
            }
            Tok::Ident(name) => {
                self.bump();
                self.algebra.symbol(&name).ok_or(ParseError {
                    kind: ParseErrorKind::UnknownSymbol(name),
                    position: at,
                })
            }
            Tok::Open => {
                self.bump();
                let v = self.expr()?;
                if *self.peek() != Tok::Close {
                    return Err(self.unexpected());
                }
                self.bump();
                Ok(v)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parse and evaluate `text` into `algebra`.
pub fn parse_with<A: Algebra>(algebra: &A, text: &str) -> Result<A::Value, ParseError> {
    let toks = tokenize(text)?;
    let mut parser = Parser { algebra, toks, idx: 0 };
    let v = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.unexpected());
    }
    Ok(v)
}

/// Evaluation of expressions directly in a field.
pub struct ElementAlgebra<'a, F: Field> {
    field: &'a F,
    symbols: Vec<(String, F::Elem)>,
}

impl<'a, F: Field> ElementAlgebra<'a, F> {
    pub fn new(field: &'a F) -> Self {
        ElementAlgebra { field, symbols: field.symbols() }
    }
}

impl<F: Field> Algebra for ElementAlgebra<'_, F> {
    type Value = F::Elem;

    fn integer(&self, n: i64) -> Result<F::Elem, String> {
        Ok(self.field.embed_int(n))
    }

    fn symbol(&self, name: &str) -> Option<F::Elem> {
        self.symbols.iter().find(|(s, _)| s == name).map(|(_, v)| v.clone())
    }

    fn add(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.field.add(a, b)
    }

    fn neg(&self, a: &F::Elem) -> F::Elem {
        self.field.neg(a)
    }

    fn sub(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.field.sub(a, b)
    }

    fn mul(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.field.mul(a, b)
    }

    fn div(&self, a: &F::Elem, b: &F::Elem) -> Result<F::Elem, String> {
        self.field.div(a, b).ok_or_else(|| "division by zero".to_string())
    }

    fn pow(&self, a: &F::Elem, e: i64) -> Result<F::Elem, String> {
        self.field.pow(a, e).ok_or_else(|| "division by zero".to_string())
    }
}

/// Parse an element of `field` from its text form.
pub fn parse_element<F: Field>(field: &F, text: &str) -> Result<F::Elem, ParseError> {
    parse_with(&ElementAlgebra::new(field), text)
}
