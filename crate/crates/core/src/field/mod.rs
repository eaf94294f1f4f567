//! Exact field backends together with a distinguished automorphism of finite
//! order.
//!
//! Every backend is a *context* object: elements are plain values and all
//! arithmetic goes through the context, which owns the modulus, tables and
//! automorphism data. The context is immutable after construction, so it can
//! be shared freely between threads.
//!
//! - [`FiniteField`]: GF(p^d) with σ a power of the Frobenius map.
//! - [`RationalFunctionField`]: F_q(z) with σ a Möbius substitution of z.
//! - [`Cyclotomic`]: Q(χ) for a primitive m-th root of unity χ (m prime) with
//!   σ(χ) = χ^k.

mod cyclotomic;
mod finite;
pub mod poly;
mod rational;

pub use cyclotomic::{Cyclo, Cyclotomic, CyclotomicCoefficient};
pub use finite::{FiniteField, GfElem, MAX_FIELD_SIZE};
pub use rational::{RatFn, RationalFunctionField};

use std::fmt::Debug;
use std::hash::Hash;

use rand::RngCore;
use thiserror::Error;

use crate::parse::{self, ParseError};

/// Errors raised while constructing a field context.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not a prime")]
    NotPrime(u64),
    #[error("field of size {p}^{degree} exceeds the supported table size")]
    TooLarge { p: u64, degree: u32 },
    #[error("modulus {0} is not irreducible")]
    Reducible(String),
    #[error("modulus must have degree {expected}, found {found}")]
    ModulusDegree { expected: u32, found: usize },
    #[error("invalid automorphism: {0}")]
    InvalidSigma(String),
    #[error("cyclotomic order {0} must be an odd prime")]
    CyclotomicOrder(u64),
    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// Exact commutative field arithmetic through a context object.
pub trait Field: Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool {
        *x == self.zero()
    }
    fn is_one(&self, x: &Self::Elem) -> bool {
        *x == self.one()
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, x: &Self::Elem, y: &Self::Elem) -> Option<Self::Elem> {
        self.inv(y).map(|yi| self.mul(x, &yi))
    }

    /// The image of an integer under the canonical ring map Z → L.
    fn embed_int(&self, n: i64) -> Self::Elem;

    /// `x^e`; negative exponents invert, so `None` only for `0^e` with `e < 0`.
    fn pow(&self, x: &Self::Elem, e: i64) -> Option<Self::Elem> {
        let base = if e < 0 { self.inv(x)? } else { x.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        Some(acc)
    }

    fn characteristic(&self) -> u64;

    /// Named constants understood by the element grammar (`a`, `z`, `chi`, ...).
    fn symbols(&self) -> Vec<(String, Self::Elem)>;

    /// Canonical text form; `parse(format(x)) == x`.
    fn format(&self, x: &Self::Elem) -> String;

    fn parse(&self, text: &str) -> Result<Self::Elem, ParseError>
    where
        Self: Sized,
    {
        parse::parse_element(self, text)
    }

    /// A random element. The distribution is backend specific and only meant
    /// for testing and simulation.
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn random_nonzero(&self, rng: &mut dyn RngCore) -> Self::Elem {
        loop {
            let x = self.random(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }

    /// Number of elements when the field is finite.
    fn cardinality(&self) -> Option<u64> {
        None
    }

    /// The `index`-th element in a fixed enumeration; only meaningful when
    /// [`Field::cardinality`] is `Some` and `index` is below it.
    fn element_at(&self, _index: u64) -> Option<Self::Elem> {
        None
    }

    /// Short human-readable description of the field.
    fn describe(&self) -> String;
}

/// A field `L` with an automorphism σ of finite order `n`.
pub trait SkewField: Field {
    /// The multiplicative order `n` of σ.
    fn order(&self) -> usize;

    /// σ^k(x) for any integer `k`, reduced modulo the order.
    fn sigma_pow(&self, k: i64, x: &Self::Elem) -> Self::Elem;

    fn sigma(&self, x: &Self::Elem) -> Self::Elem {
        self.sigma_pow(1, x)
    }

    /// The distinguished generator (`a`, `z` or `χ`).
    fn generator(&self) -> Self::Elem;

    /// Whether `x` lies in the invariant subfield L^σ.
    fn is_fixed(&self, x: &Self::Elem) -> bool {
        self.sigma(x) == *x
    }

    /// Short description of σ.
    fn describe_sigma(&self) -> String;
}

/// Reduce an automorphism exponent into `0..n`.
pub(crate) fn reduce_exponent(k: i64, n: usize) -> usize {
    k.rem_euclid(n as i64) as usize
}

#[cfg(test)]
pub(crate) mod testing {
    //! Shared property checks for all backends.
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub fn check_field_axioms<F: SkewField>(field: &F, seed: u64, pairs: usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..pairs {
            let x = field.random(&mut rng);
            let y = field.random(&mut rng);
            let z = field.random(&mut rng);
            assert_eq!(field.add(&x, &y), field.add(&y, &x));
            assert_eq!(field.mul(&x, &y), field.mul(&y, &x));
            assert_eq!(
                field.add(&field.add(&x, &y), &z),
                field.add(&x, &field.add(&y, &z))
            );
            assert_eq!(
                field.mul(&field.mul(&x, &y), &z),
                field.mul(&x, &field.mul(&y, &z))
            );
            assert_eq!(
                field.mul(&x, &field.add(&y, &z)),
                field.add(&field.mul(&x, &y), &field.mul(&x, &z))
            );
            assert!(field.is_zero(&field.sub(&x, &x)));
            if let Some(yi) = field.inv(&y) {
                assert!(field.is_one(&field.mul(&y, &yi)));
                assert_eq!(field.mul(&field.mul(&x, &y), &yi), x);
            } else {
                assert!(field.is_zero(&y));
            }
            // σ is a ring homomorphism
            assert_eq!(
                field.sigma(&field.add(&x, &y)),
                field.add(&field.sigma(&x), &field.sigma(&y))
            );
            assert_eq!(
                field.sigma(&field.mul(&x, &y)),
                field.mul(&field.sigma(&x), &field.sigma(&y))
            );
            assert_eq!(field.sigma_pow(field.order() as i64, &x), x);
            assert_eq!(field.sigma_pow(-1, &field.sigma(&x)), x);
            // printing round-trips
            let text = field.format(&x);
            assert_eq!(field.parse(&text).unwrap(), x, "round trip of {text}");
        }
    }

    pub fn check_order<F: SkewField>(field: &F) {
        let gen = field.generator();
        let n = field.order();
        assert_eq!(field.sigma_pow(n as i64, &gen), gen);
        for k in 1..n {
            assert_ne!(field.sigma_pow(k as i64, &gen), gen, "σ^{k} fixes the generator");
        }
    }
}
