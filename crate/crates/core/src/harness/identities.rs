//! Structural identities of a skew Reed-Solomon code, checked exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::SkewRsCode;
use crate::field::SkewField;
use crate::linalg;
use crate::skew_poly::{SkewPoly, SkewRing};

/// Largest degree of the random polynomials in the degree-law check.
pub const RANDOM_DEGREE: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    /// lclm of x - σ^j(β) over all j equals x^n - 1.
    pub conjugate_lclm_is_modulus: bool,
    pub evaluation_rank: usize,
    pub length: usize,
    pub degree_law_pairs: usize,
    /// Pairs with deg gcrd + deg lclm ≠ deg f + deg g, or where lclm is not
    /// a left multiple of both operands.
    pub degree_law_failures: usize,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.conjugate_lclm_is_modulus && self.evaluation_rank == self.length && self.degree_law_failures == 0
    }
}

/// A random polynomial of degree exactly `degree`.
pub fn random_poly<F: SkewField>(ring: &SkewRing<'_, F>, degree: usize, rng: &mut ChaCha8Rng) -> SkewPoly<F::Elem> {
    let field = ring.field();
    let mut coeffs: Vec<F::Elem> = (0..degree).map(|_| field.random(rng)).collect();
    coeffs.push(field.random_nonzero(rng));
    ring.poly(coeffs)
}

fn degree_law_holds<F: SkewField>(ring: &SkewRing<'_, F>, f: &SkewPoly<F::Elem>, g: &SkewPoly<F::Elem>) -> bool {
    let (Ok(d), Ok(l)) = (ring.gcrd(f, g), ring.lclm(f, g)) else {
        return false;
    };
    let deg = |p: &SkewPoly<F::Elem>| p.degree().unwrap_or(0);
    deg(&d) + deg(&l) == deg(f) + deg(g)
        && ring.right_divides(f, &l)
        && ring.right_divides(g, &l)
        && ring.right_divides(&d, f)
        && ring.right_divides(&d, g)
}

pub fn check_identities<F: SkewField>(code: &SkewRsCode<F>, pairs: usize, seed: u64) -> IdentityReport {
    let field = code.field();
    let ring = code.ring();
    let n = code.length();
    let factors: Vec<_> = (0..n).map(|j| ring.linear(&field.sigma_pow(j as i64, code.beta()))).collect();
    let conjugate_lclm_is_modulus = ring.lclm_all(&factors).is_ok_and(|l| l == ring.modulus());
    let evaluation_rank = linalg::rank(field, code.evaluation_matrix());

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let degree_law_failures = (0..pairs)
        .filter(|_| {
            let df = rng.gen_range(0..=RANDOM_DEGREE);
            let dg = rng.gen_range(0..=RANDOM_DEGREE);
            let f = random_poly(&ring, df, &mut rng);
            let g = random_poly(&ring, dg, &mut rng);
            !degree_law_holds(&ring, &f, &g)
        })
        .count();
    IdentityReport {
        conjugate_lclm_is_modulus,
        evaluation_rank,
        length: n,
        degree_law_pairs: pairs,
        degree_law_failures,
    }
}
