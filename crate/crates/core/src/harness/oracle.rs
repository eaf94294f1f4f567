//! Exhaustive checks of the decoder against nearest-codeword search.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::code::{CodeError, SkewRsCode};
use crate::field::SkewField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoderAgreement {
    /// Received words examined.
    pub scanned: u64,
    /// Words within distance t of a codeword.
    pub inside_balls: u64,
    pub disagreements: u64,
    /// Whether every word of L^n was scanned rather than only the balls.
    pub full_space: bool,
}

impl DecoderAgreement {
    pub fn render(&self) -> String {
        format!(
            "scanned = {}\ninside_balls = {}\nfull_space = {}\ndisagreements = {}\n",
            self.scanned, self.inside_balls, self.full_space, self.disagreements
        )
    }
}

fn digits<F: SkewField>(field: &F, mut index: u64, q: u64, len: usize) -> Vec<F::Elem> {
    (0..len)
        .map(|_| {
            let x = field.element_at(index % q).expect("finite enumeration");
            index /= q;
            x
        })
        .collect()
}

/// Every error pattern of weight 1..=t: positions in increasing order and
/// one nonzero value per position.
fn error_patterns<F: SkewField>(code: &SkewRsCode<F>, q: u64) -> Vec<Vec<F::Elem>> {
    let field = code.field();
    let n = code.length();
    let nonzero: Vec<F::Elem> = (0..q).filter_map(|i| field.element_at(i)).filter(|x| !field.is_zero(x)).collect();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<F::Elem>, usize)> = vec![(0, vec![field.zero(); n], 0)];
    while let Some((start, word, weight)) = stack.pop() {
        if weight > 0 {
            out.push(word.clone());
        }
        if weight == code.capability() {
            continue;
        }
        for k in start..n {
            for v in &nonzero {
                let mut next = word.clone();
                next[k] = v.clone();
                stack.push((k + 1, next, weight + 1));
            }
        }
    }
    out
}

/// Compare the decoder with nearest-codeword decoding. Every word within
/// distance t of a codeword must decode to it; when L^n fits in `budget`
/// every other word is also scanned and must be rejected.
pub fn decoder_agreement<F: SkewField>(
    code: &SkewRsCode<F>,
    budget: u128,
) -> Result<DecoderAgreement, CodeError> {
    let field = code.field();
    let q = field.cardinality().ok_or(CodeError::InfiniteField)?;
    let n = code.length();
    let k = code.dimension();
    let codewords_needed = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    let patterns = error_patterns(code, q);
    let ball_needed = codewords_needed.saturating_mul(patterns.len() as u128 + 1);
    if ball_needed > budget {
        return Err(CodeError::BudgetExceeded { needed: ball_needed, budget });
    }
    let codewords: Vec<Vec<F::Elem>> = (0..codewords_needed as u64)
        .into_par_iter()
        .map(|i| code.encode_vector(&digits(field, i, q, k)).expect("message fits"))
        .collect();

    // received word → the unique codeword within distance t
    let mut nearest: HashMap<Vec<F::Elem>, usize> = HashMap::new();
    for (ci, c) in codewords.iter().enumerate() {
        nearest.insert(c.clone(), ci);
        for e in &patterns {
            let y: Vec<F::Elem> = c.iter().zip(e).map(|(a, b)| field.add(a, b)).collect();
            nearest.insert(y, ci);
        }
    }
    let inside_balls = nearest.len() as u64;

    let check = |y: &Vec<F::Elem>| -> bool {
        let report = code.decode(y).expect("length n");
        match (nearest.get(y), &report.correction) {
            (Some(&ci), Some(fix)) => fix.codeword == codewords[ci],
            (None, None) => true,
            _ => false,
        }
    };

    let space = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if space <= budget {
        let disagreements = (0..space as u64)
            .into_par_iter()
            .filter(|&i| !check(&digits(field, i, q, n)))
            .count() as u64;
        Ok(DecoderAgreement { scanned: space as u64, inside_balls, disagreements, full_space: true })
    } else {
        let words: Vec<&Vec<F::Elem>> = nearest.keys().collect();
        let disagreements = words.par_iter().filter(|y| !check(y)).count() as u64;
        Ok(DecoderAgreement { scanned: inside_balls, inside_balls, disagreements, full_space: false })
    }
}
