//! Peterson-Gorenstein-Zierler decoding for skew Reed-Solomon codes.
//!
//! The decoder works with the narrow-sense data α' = σ^r(α), β' = σ^r(β),
//! so positions refer to coordinates of the received word and the defining
//! set is {0, ..., δ - 2} relative to β'.

use std::fmt;

use thiserror::Error;

use crate::code::{analyze_roots, CodeError, SkewRsCode};
use crate::field::SkewField;
use crate::linalg::{self, Matrix};
use crate::skew_poly::SkewPoly;

/// How the error positions were found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// All syndromes vanished.
    AllZero,
    /// ρ had exactly μ β-roots, so it is the error locator.
    Direct,
    /// ρ had fewer than μ β-roots; positions come from the echelon form of
    /// the multiples of ρ.
    Echelon,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::AllZero => "all-zero",
            Branch::Direct => "direct",
            Branch::Echelon => "echelon",
        })
    }
}

/// Why a received word could not be corrected.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DecodeFailure {
    #[error("nonzero syndromes on a code with no correction capability")]
    DetectedOnly,
    #[error("column echelon form of the syndrome matrix has an unexpected shape")]
    EchelonShape,
    #[error("{found} error positions located, capability is {t}")]
    TooManyPositions { found: usize, t: usize },
    #[error("{found} error positions located, fewer than the syndrome rank {mu}")]
    TooFewPositions { found: usize, mu: usize },
    #[error("error value system is singular")]
    SingularValues,
    #[error("corrected word is not a codeword")]
    Verification,
}

/// The corrected word and what was removed from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correction<E> {
    pub error: Vec<E>,
    pub codeword: Vec<E>,
    pub message: SkewPoly<E>,
}

/// Everything the decoder computed for one received word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeReport<E> {
    pub syndromes: Vec<E>,
    /// (t+1)×t syndrome matrix.
    pub syndrome_matrix: Matrix<E>,
    pub syndrome_rcef: Matrix<E>,
    pub mu: usize,
    pub rho: Option<SkewPoly<E>>,
    /// Coefficients of ρ pushed through the decoder's evaluation matrix.
    pub rho_evaluations: Vec<E>,
    pub branch: Option<Branch>,
    /// `rref(M_ρ N')`, only in the echelon branch.
    pub echelon: Option<Matrix<E>>,
    pub positions: Vec<usize>,
    pub values: Vec<E>,
    pub correction: Option<Correction<E>>,
    pub failure: Option<DecodeFailure>,
}

impl<E> DecodeReport<E> {
    pub fn is_success(&self) -> bool {
        self.correction.is_some()
    }
}

impl<F: SkewField> SkewRsCode<F> {
    /// s_i = Σ_j y_j N_j(σ^i(β')) for 0 ≤ i < 2t.
    pub fn syndromes(&self, y: &[F::Elem]) -> Result<Vec<F::Elem>, CodeError> {
        self.check_length(y)?;
        let two_t = 2 * self.capability();
        let full = linalg::vec_mul(self.field(), y, self.decoder_evaluation_matrix())?;
        Ok(full.into_iter().take(two_t).collect())
    }

    /// The same syndromes through σ^i(α'^(-1)) Σ_j y_j σ^(i+j)(α').
    pub fn syndromes_from_conjugates(&self, y: &[F::Elem]) -> Result<Vec<F::Elem>, CodeError> {
        self.check_length(y)?;
        let field = self.field();
        let n = self.length();
        let conj = self.decoder_conjugates();
        Ok((0..2 * self.capability())
            .map(|i| {
                let sum = y.iter().enumerate().fold(field.zero(), |acc, (j, yj)| {
                    field.add(&acc, &field.mul(yj, &conj[(i + j) % n]))
                });
                field.div(&sum, &conj[i % n]).expect("conjugates of a normal element are nonzero")
            })
            .collect())
    }

    /// Entry (i, j) is σ^(-j)(s_(i+j))·σ^i(α') for 0 ≤ i ≤ t, 0 ≤ j < t.
    pub fn syndrome_matrix(&self, s: &[F::Elem]) -> Matrix<F::Elem> {
        let t = self.capability();
        let field = self.field();
        let conj = self.decoder_conjugates();
        let n = self.length();
        Matrix::from_fn(t + 1, t, |i, j| {
            field.mul(&field.sigma_pow(-(j as i64), &s[i + j]), &conj[i % n])
        })
    }

    /// Read μ and ρ = x^μ - Σ a_i x^i off the column echelon form.
    pub fn extract_rho(
        &self,
        rcef: &Matrix<F::Elem>,
        pivot_rows: &[usize],
    ) -> Result<(usize, SkewPoly<F::Elem>), DecodeFailure> {
        let field = self.field();
        let mu = pivot_rows.len();
        if pivot_rows.iter().enumerate().any(|(i, &p)| i != p) || mu >= rcef.rows() {
            return Err(DecodeFailure::EchelonShape);
        }
        let mut coeffs: Vec<F::Elem> = (0..mu).map(|i| field.neg(rcef.get(mu, i))).collect();
        coeffs.push(field.one());
        Ok((mu, self.ring().poly(coeffs)))
    }

    /// The system X·M = b for the error values: row j of M is
    /// (σ^(k_j + c)(α'))_c and b_c = σ^c(α') s_c.
    pub fn error_value_system(
        &self,
        positions: &[usize],
        s: &[F::Elem],
    ) -> (Matrix<F::Elem>, Vec<F::Elem>) {
        let field = self.field();
        let conj = self.decoder_conjugates();
        let n = self.length();
        let nu = positions.len();
        let m = Matrix::from_fn(nu, nu, |j, c| conj[(positions[j] + c) % n].clone());
        let rhs = (0..nu).map(|c| field.mul(&conj[c % n], &s[c])).collect();
        (m, rhs)
    }

    pub fn error_values(
        &self,
        positions: &[usize],
        s: &[F::Elem],
    ) -> Result<Vec<F::Elem>, DecodeFailure> {
        let (m, rhs) = self.error_value_system(positions, s);
        linalg::solve_row_system(self.field(), &m, &rhs).map_err(|_| DecodeFailure::SingularValues)
    }

    /// Decode a received word of length n.
    pub fn decode(&self, y: &[F::Elem]) -> Result<DecodeReport<F::Elem>, CodeError> {
        let field = self.field();
        let t = self.capability();
        let syndromes = self.syndromes(y)?;
        let syndrome_matrix = self.syndrome_matrix(&syndromes);
        let mut report = DecodeReport {
            syndromes,
            syndrome_rcef: syndrome_matrix.clone(),
            syndrome_matrix,
            mu: 0,
            rho: None,
            rho_evaluations: Vec::new(),
            branch: None,
            echelon: None,
            positions: Vec::new(),
            values: Vec::new(),
            correction: None,
            failure: None,
        };

        if report.syndromes.iter().all(|s| field.is_zero(s)) {
            report.branch = Some(Branch::AllZero);
            match self.finish(y, vec![field.zero(); self.length()]) {
                Some(c) => report.correction = Some(c),
                None if t == 0 => report.failure = Some(DecodeFailure::DetectedOnly),
                None => report.failure = Some(DecodeFailure::Verification),
            }
            return Ok(report);
        }

        let (rcef, pivot_rows) = linalg::rcef(field, &report.syndrome_matrix);
        report.syndrome_rcef = rcef;
        let (mu, rho) = match self.extract_rho(&report.syndrome_rcef, &pivot_rows) {
            Ok(v) => v,
            Err(e) => {
                report.failure = Some(e);
                return Ok(report);
            }
        };
        report.mu = mu;
        let eval = self.decoder_evaluation_matrix();
        let mut rho_vec = rho.coeffs().to_vec();
        rho_vec.resize(self.length(), field.zero());
        report.rho_evaluations = linalg::vec_mul(field, &rho_vec, eval)?;
        report.rho = Some(rho.clone());

        let direct: Vec<usize> =
            (0..self.length()).filter(|&j| field.is_zero(&report.rho_evaluations[j])).collect();
        if direct.len() == mu {
            report.branch = Some(Branch::Direct);
            report.positions = direct;
        } else {
            report.branch = Some(Branch::Echelon);
            let analysis = analyze_roots(field, &rho, eval)?;
            report.positions = analysis.zero_columns;
            report.echelon = Some(analysis.echelon);
        }

        let nu = report.positions.len();
        if nu > t {
            report.failure = Some(DecodeFailure::TooManyPositions { found: nu, t });
            return Ok(report);
        }
        if nu < mu {
            report.failure = Some(DecodeFailure::TooFewPositions { found: nu, mu });
            return Ok(report);
        }
        match self.error_values(&report.positions, &report.syndromes) {
            Ok(values) => report.values = values,
            Err(e) => {
                report.failure = Some(e);
                return Ok(report);
            }
        }
        let mut error = vec![field.zero(); self.length()];
        for (&k, v) in report.positions.iter().zip(&report.values) {
            error[k] = v.clone();
        }
        match self.finish(y, error) {
            Some(c) => report.correction = Some(c),
            None => report.failure = Some(DecodeFailure::Verification),
        }
        Ok(report)
    }

    /// Recover the message once the corrected word passes verification.
    fn finish(&self, y: &[F::Elem], error: Vec<F::Elem>) -> Option<Correction<F::Elem>> {
        let field = self.field();
        let codeword: Vec<F::Elem> = y.iter().zip(&error).map(|(a, b)| field.sub(a, b)).collect();
        let syndromes = self.syndromes(&codeword).ok()?;
        if !syndromes.iter().all(|s| field.is_zero(s)) {
            return None;
        }
        let (message, rem) =
            self.ring().left_divmod(&self.from_vector(&codeword), self.generator()).ok()?;
        rem.is_zero().then_some(Correction { error, codeword, message })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, FiniteField};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn code(r: usize, delta: usize) -> SkewRsCode<FiniteField> {
        let f = FiniteField::with_modulus_text(2, Some(12), "a^12 + a^7 + a^6 + a^5 + a^3 + a + 1", "a", 10)
            .unwrap();
        let a = f.generator();
        SkewRsCode::new(f, a, r, delta).unwrap()
    }

    #[test]
    fn syndrome_formulas_agree() {
        for r in [0, 3] {
            let code = code(r, 5);
            let f = code.field();
            let mut rng = ChaCha8Rng::seed_from_u64(r as u64);
            for _ in 0..50 {
                let y: Vec<_> = (0..6).map(|_| f.random(&mut rng)).collect();
                assert_eq!(code.syndromes(&y).unwrap(), code.syndromes_from_conjugates(&y).unwrap());
            }
        }
    }

    #[test]
    fn single_error_syndromes_are_norms() {
        let code = code(0, 5);
        let f = code.field();
        let ring = code.ring();
        let c = code.encode_vector(&[f.gen_pow(7), f.one()]).unwrap();
        for k in 0..6 {
            let mut y = c.clone();
            y[k] = f.add(&y[k], &f.one());
            let s = code.syndromes(&y).unwrap();
            for (i, si) in s.iter().enumerate() {
                assert_eq!(*si, ring.norm(k, &f.sigma_pow(i as i64, code.beta())));
            }
        }
    }

    #[test]
    fn corrects_up_to_capability_with_offset() {
        for r in [0, 2, 5] {
            let code = code(r, 5);
            let f = code.field();
            let mut rng = ChaCha8Rng::seed_from_u64(40 + r as u64);
            for trial in 0..200 {
                let m: Vec<_> = (0..code.dimension()).map(|_| f.random(&mut rng)).collect();
                let c = code.encode_vector(&m).unwrap();
                let mut e = vec![f.zero(); 6];
                for _ in 0..(trial % 3) {
                    let k = rand::Rng::gen_range(&mut rng, 0..6);
                    e[k] = f.random_nonzero(&mut rng);
                }
                let y: Vec<_> = c.iter().zip(&e).map(|(a, b)| f.add(a, b)).collect();
                let rep = code.decode(&y).unwrap();
                let fix = rep.correction.expect("decodes");
                assert_eq!(fix.error, e);
                assert_eq!(fix.codeword, c);
                assert_eq!(fix.message, code.ring().poly(m));
            }
        }
    }

    #[test]
    fn detect_only_code() {
        let code = code(0, 2);
        let f = code.field();
        let c = code.encode_vector(&[f.one(), f.zero(), f.gen_pow(3), f.zero(), f.one()]).unwrap();
        assert!(code.decode(&c).unwrap().is_success());
        let mut y = c.clone();
        y[1] = f.add(&y[1], &f.one());
        let rep = code.decode(&y).unwrap();
        assert_eq!(rep.failure, Some(DecodeFailure::DetectedOnly));
    }

    #[test]
    fn wrong_length_is_an_error() {
        let code = code(0, 5);
        assert!(matches!(code.decode(&[]), Err(CodeError::WrongLength { expected: 6, found: 0 })));
    }
}
