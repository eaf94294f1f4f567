//! Skew Reed-Solomon codes over fields with an automorphism of finite
//! order, with Peterson-Gorenstein-Zierler decoding in exact arithmetic.
//!
//! Backends: [`FiniteField`] is GF(p^d) with a power of Frobenius.
//! [`RationalFunctionField`] is F_q(z) under a Möbius substitution.
//! [`Cyclotomic`] is Q(χ) for a prime root of unity χ, with χ ↦ χ^k.
//!
//! ```
//! use skewrs::{Field, FiniteCode, FiniteField, SkewField};
//!
//! let field = FiniteField::with_modulus_text(2, Some(12), "a^12 + a^7 + a^6 + a^5 + a^3 + a + 1", "a", 10)?;
//! let alpha = field.generator();
//! let code = FiniteCode::new(field, alpha, 0, 5)?;
//! let ring = code.ring();
//! assert_eq!(ring.format(code.generator()), "x^4 + a^2103*x^3 + a^687*x^2 + a^1848*x + a^759");
//!
//! let mut y = code.encode_vector(&[code.field().generator(), code.field().one()])?;
//! y[3] = code.field().add(&y[3], &code.field().gen_pow(3));
//! let report = code.decode(&y)?;
//! assert_eq!(report.positions, vec![3]);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod code;
pub mod config;
pub mod decoder;
pub mod dispatch;
pub mod field;
pub mod harness;
pub mod linalg;
pub mod parse;
pub mod report;
pub mod skew_poly;

use num_rational::BigRational;

pub use code::{CodeError, SkewRsCode};
pub use config::{load_bundle, CodeSpec, ConfigError};
pub use decoder::{Branch, DecodeFailure, DecodeReport};
pub use dispatch::AnyCode;
pub use field::{
    Cyclo, Cyclotomic, Field, FieldError, FiniteField, GfElem, RatFn, RationalFunctionField, SkewField,
};
pub use linalg::Matrix;
pub use skew_poly::{SkewPoly, SkewRing};

/// Q(χ) with exact big rationals.
pub type CyclotomicField = Cyclotomic<BigRational>;

pub type FiniteCode = SkewRsCode<FiniteField>;
pub type RationalFunctionCode = SkewRsCode<RationalFunctionField>;
pub type CyclotomicCode = SkewRsCode<CyclotomicField>;
