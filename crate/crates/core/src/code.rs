//! Construction and encoding of skew Reed-Solomon codes.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::field::SkewField;
use crate::linalg::{self, LinalgError, Matrix};
use crate::skew_poly::{SkewPoly, SkewPolyError, SkewRing};

/// Trials of [`find_normal_element`] after the generator is rejected.
pub const NORMAL_SEARCH_TRIALS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("element is not normal: its conjugates are linearly dependent over the fixed field")]
    NotNormal,
    #[error("designed distance {delta} must satisfy 2 <= delta <= n = {n}")]
    DeltaOutOfRange { delta: usize, n: usize },
    #[error("no normal element found in {0} trials")]
    NoNormalElement(usize),
    #[error("message has {found} coefficients, at most {max} allowed")]
    MessageTooLong { found: usize, max: usize },
    #[error("expected a vector of length {expected}, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("error weight {weight} exceeds the code length {n}")]
    InvalidWeight { weight: usize, n: usize },
    #[error("exhaustive search needs {needed} codewords, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("exhaustive search requires a finite field")]
    InfiniteField,
    #[error(transparent)]
    SkewPoly(#[from] SkewPolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The n×n conjugate matrix (σ^(i+j)(α)).
pub fn conjugate_matrix<F: SkewField>(field: &F, alpha: &F::Elem) -> Matrix<F::Elem> {
    let n = field.order();
    let conj: Vec<F::Elem> = (0..2 * n).map(|k| field.sigma_pow(k as i64, alpha)).collect();
    Matrix::from_fn(n, n, |i, j| conj[i + j].clone())
}

/// Whether the conjugates of `alpha` form a basis of L over the fixed field.
pub fn is_normal<F: SkewField>(field: &F, alpha: &F::Elem) -> bool {
    !field.is_zero(alpha) && linalg::rank(field, &conjugate_matrix(field, alpha)) == field.order()
}

/// The backend generator if it is normal, otherwise the first normal element
/// among seeded random draws.
pub fn find_normal_element<F: SkewField>(
    field: &F,
    trials: usize,
    seed: u64,
) -> Result<F::Elem, CodeError> {
    let gen = field.generator();
    if is_normal(field, &gen) {
        return Ok(gen);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| field.random(&mut rng))
        .find(|x| is_normal(field, x))
        .ok_or(CodeError::NoNormalElement(trials))
}

/// The evaluation matrix for `beta`: column j is (N_0(σ^j(β)), ..., N_(n-1)(σ^j(β))).
pub fn evaluation_matrix<F: SkewField>(field: &F, beta: &F::Elem) -> Matrix<F::Elem> {
    let n = field.order();
    let ring = SkewRing::new(field);
    let columns: Vec<Vec<F::Elem>> =
        (0..n).map(|j| ring.norms(&field.sigma_pow(j as i64, beta), n)).collect();
    Matrix::from_fn(n, n, |i, j| columns[j][i].clone())
}

/// Echelon data of the rows `x^i f` (0 ≤ i < n - deg f) pushed through an
/// evaluation matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootAnalysis<E> {
    /// `rref(M_f · N)`.
    pub echelon: Matrix<E>,
    /// For each row of `echelon`, the index `i` if the row is ε_i.
    pub canonical: Vec<Option<usize>>,
    /// Zero columns of the matrix made of the canonical rows only.
    pub zero_columns: Vec<usize>,
}

impl<E> RootAnalysis<E> {
    pub fn fully_decomposed(&self) -> bool {
        self.canonical.iter().all(Option::is_some)
    }
}

/// Row `i` of the result holds the coefficients of `x^i · f`, for
/// `0 <= i < n - deg f`.
pub fn multiple_matrix<F: SkewField>(field: &F, f: &SkewPoly<F::Elem>) -> Matrix<F::Elem> {
    let n = field.order();
    let ring = SkewRing::new(field);
    let m = f.degree().unwrap_or(0);
    let rows: Vec<Vec<F::Elem>> = (0..n.saturating_sub(m))
        .map(|i| {
            let mut row = ring.shift(f, i).into_coeffs();
            row.resize(n, field.zero());
            row
        })
        .collect();
    Matrix::from_rows(rows)
}

/// Analyse a right divisor `f` of x^n - 1 against `eval`.
pub fn analyze_roots<F: SkewField>(
    field: &F,
    f: &SkewPoly<F::Elem>,
    eval: &Matrix<F::Elem>,
) -> Result<RootAnalysis<F::Elem>, CodeError> {
    let n = field.order();
    let mf = multiple_matrix(field, f);
    let (echelon, pivots) = linalg::rref(field, &linalg::mul(field, &mf, eval)?);
    let canonical: Vec<Option<usize>> = (0..echelon.rows())
        .map(|i| if i < pivots.len() { linalg::canonical_index(field, echelon.row(i)) } else { None })
        .collect();
    let covered: BTreeSet<usize> = canonical.iter().flatten().copied().collect();
    let zero_columns = (0..n).filter(|j| !covered.contains(j)).collect();
    Ok(RootAnalysis { echelon, canonical, zero_columns })
}

/// A skew Reed-Solomon code of length n with designed distance δ.
#[derive(Clone, Debug)]
pub struct SkewRsCode<F: SkewField> {
    field: F,
    n: usize,
    r: usize,
    delta: usize,
    t: usize,
    alpha: F::Elem,
    beta: F::Elem,
    generator: SkewPoly<F::Elem>,
    eval: Matrix<F::Elem>,
    /// σ^k(α') for 0 ≤ k < n where α' = σ^r(α).
    shifted_conjugates: Vec<F::Elem>,
    /// Columns of `eval` rotated by r, the evaluation matrix for β' = σ^r(β).
    shifted_eval: Matrix<F::Elem>,
}

impl<F: SkewField> SkewRsCode<F> {
    pub fn new(field: F, alpha: F::Elem, r: usize, delta: usize) -> Result<Self, CodeError> {
        let n = field.order();
        if delta < 2 || delta > n {
            return Err(CodeError::DeltaOutOfRange { delta, n });
        }
        if !is_normal(&field, &alpha) {
            return Err(CodeError::NotNormal);
        }
        let beta = field.div(&field.sigma(&alpha), &alpha).expect("normal elements are nonzero");
        let ring = SkewRing::new(&field);
        let factors: Vec<SkewPoly<F::Elem>> = (0..delta - 1)
            .map(|i| ring.linear(&field.sigma_pow((r + i) as i64, &beta)))
            .collect();
        let generator = ring.lclm_all(&factors)?;
        let eval = evaluation_matrix(&field, &beta);
        let shifted_conjugates = (0..n).map(|k| field.sigma_pow((r + k) as i64, &alpha)).collect();
        let shifted_eval = Matrix::from_fn(n, n, |i, j| eval.get(i, (j + r) % n).clone());
        Ok(SkewRsCode {
            field,
            n,
            r,
            delta,
            t: (delta - 1) / 2,
            alpha,
            beta,
            generator,
            eval,
            shifted_conjugates,
            shifted_eval,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ring(&self) -> SkewRing<'_, F> {
        SkewRing::new(&self.field)
    }

    pub fn length(&self) -> usize {
        self.n
    }

    /// Number of message coefficients, n - δ + 1.
    pub fn dimension(&self) -> usize {
        self.n + 1 - self.delta
    }

    pub fn offset(&self) -> usize {
        self.r
    }

    pub fn designed_distance(&self) -> usize {
        self.delta
    }

    /// Correction capability ⌊(δ - 1)/2⌋.
    pub fn capability(&self) -> usize {
        self.t
    }

    pub fn alpha(&self) -> &F::Elem {
        &self.alpha
    }

    pub fn beta(&self) -> &F::Elem {
        &self.beta
    }

    pub fn generator(&self) -> &SkewPoly<F::Elem> {
        &self.generator
    }

    /// The evaluation matrix N for β.
    pub fn evaluation_matrix(&self) -> &Matrix<F::Elem> {
        &self.eval
    }

    /// The evaluation matrix for σ^r(β) used by the decoder.
    pub fn decoder_evaluation_matrix(&self) -> &Matrix<F::Elem> {
        &self.shifted_eval
    }

    /// σ^k(σ^r(α)) for 0 ≤ k < n.
    pub fn decoder_conjugates(&self) -> &[F::Elem] {
        &self.shifted_conjugates
    }

    /// Coefficient vector of length n.
    pub fn to_vector(&self, c: &SkewPoly<F::Elem>) -> Result<Vec<F::Elem>, CodeError> {
        let len = c.coeffs().len();
        if len > self.n {
            return Err(CodeError::WrongLength { expected: self.n, found: len });
        }
        let mut v = c.coeffs().to_vec();
        v.resize(self.n, self.field.zero());
        Ok(v)
    }

    pub fn from_vector(&self, v: &[F::Elem]) -> SkewPoly<F::Elem> {
        self.ring().poly(v.to_vec())
    }

    pub(crate) fn check_length(&self, v: &[F::Elem]) -> Result<(), CodeError> {
        if v.len() == self.n {
            Ok(())
        } else {
            Err(CodeError::WrongLength { expected: self.n, found: v.len() })
        }
    }

    /// `c = m·g`.
    pub fn encode(&self, m: &SkewPoly<F::Elem>) -> Result<SkewPoly<F::Elem>, CodeError> {
        let k = self.dimension();
        if m.coeffs().len() > k {
            return Err(CodeError::MessageTooLong { found: m.coeffs().len(), max: k });
        }
        Ok(self.ring().mul(m, &self.generator))
    }

    pub fn encode_vector(&self, m: &[F::Elem]) -> Result<Vec<F::Elem>, CodeError> {
        let c = self.encode(&self.ring().poly(m.to_vec()))?;
        self.to_vector(&c)
    }

    pub fn is_codeword(&self, v: &[F::Elem]) -> bool {
        v.len() == self.n && self.ring().right_divides(&self.generator, &self.from_vector(v))
    }

    /// `v·N`: coordinate j is the remainder of v at σ^j(β).
    pub fn evaluate(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>, CodeError> {
        self.check_length(v)?;
        Ok(linalg::vec_mul(&self.field, v, &self.eval)?)
    }

    /// The skew cyclic shift (σ(c_(n-1)), σ(c_0), ..., σ(c_(n-2))).
    pub fn shift(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        (0..v.len())
            .map(|i| self.field.sigma(&v[(i + v.len() - 1) % v.len()]))
            .collect()
    }

    /// Indices j with x - σ^j(β) among the factors of `f`, if `f` is the
    /// lclm of such factors; `None` otherwise.
    pub fn full_beta_decomposition(
        &self,
        f: &SkewPoly<F::Elem>,
    ) -> Result<Option<Vec<usize>>, CodeError> {
        let analysis = analyze_roots(&self.field, f, &self.eval)?;
        Ok(analysis.fully_decomposed().then_some(analysis.zero_columns))
    }

    /// Minimum weight over all nonzero codewords, by enumerating every
    /// message. Errors if the number of messages exceeds `budget`.
    pub fn min_distance_oracle(&self, budget: u128) -> Result<usize, CodeError> {
        let q = self.field.cardinality().ok_or(CodeError::InfiniteField)? as u128;
        let k = self.dimension() as u32;
        let needed = q.checked_pow(k).unwrap_or(u128::MAX);
        if needed > budget {
            return Err(CodeError::BudgetExceeded { needed, budget });
        }
        let q = q as u64;
        let best = (1..needed as u64)
            .into_par_iter()
            .map(|index| {
                let mut digits = Vec::with_capacity(k as usize);
                let mut rest = index;
                for _ in 0..k {
                    digits.push(self.field.element_at(rest % q).expect("finite enumeration"));
                    rest /= q;
                }
                let c = self.encode_vector(&digits).expect("message fits");
                c.iter().filter(|x| !self.field.is_zero(x)).count()
            })
            .min();
        Ok(best.unwrap_or(self.n))
    }
}
