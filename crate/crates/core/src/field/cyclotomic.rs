use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed, Zero};
use rand::RngCore;

use super::{reduce_exponent, Field, FieldError, SkewField};

/// Exact coefficient type for [`Cyclotomic`]: any signed exact number field
/// scalar, e.g. `BigRational` or `Ratio<i64>`.
pub trait CyclotomicCoefficient:
    Num + Signed + FromPrimitive + Clone + Display + Debug + Eq + std::hash::Hash + Send + Sync
{
}

impl<T> CyclotomicCoefficient for T where
    T: Num + Signed + FromPrimitive + Clone + Display + Debug + Eq + std::hash::Hash + Send + Sync
{
}

/// Element of Q(χ) in the power basis `1, χ, ..., χ^(m-2)`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Cyclo<Q>(Vec<Q>);

impl<Q: Clone> Cyclo<Q> {
    pub fn coefficients(&self) -> &[Q] {
        &self.0
    }
}

/// The cyclotomic field Q(χ), χ a primitive m-th root of unity with `m` an
/// odd prime, and σ(χ) = χ^k.
#[derive(Clone, Debug)]
pub struct Cyclotomic<Q> {
    m: usize,
    exponent: usize,
    order: usize,
    symbol: String,
    _coeff: std::marker::PhantomData<fn() -> Q>,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl<Q: CyclotomicCoefficient> Cyclotomic<Q> {
    pub fn new(m: u64, exponent: u64, symbol: &str) -> Result<Self, FieldError> {
        if m < 3 || !is_prime(m) {
            return Err(FieldError::CyclotomicOrder(m));
        }
        let k = exponent % m;
        if k == 0 {
            return Err(FieldError::InvalidSigma(format!("exponent {exponent} is not a unit mod {m}")));
        }
        let mut order = 1;
        let mut cur = k;
        while cur != 1 {
            cur = cur * k % m;
            order += 1;
        }
        let field = Cyclotomic {
            m: m as usize,
            exponent: k as usize,
            order,
            symbol: symbol.to_string(),
            _coeff: std::marker::PhantomData,
        };
        Ok(field)
    }

    pub fn root_order(&self) -> usize {
        self.m
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn symbol_name(&self) -> &str {
        &self.symbol
    }

    /// χ^i for any integer `i`.
    pub fn root_power(&self, i: i64) -> Cyclo<Q> {
        let mut v = vec![Q::zero(); self.m];
        v[i.rem_euclid(self.m as i64) as usize] = Q::one();
        self.reduce(v)
    }

    /// Element from integer coefficients in the power basis.
    pub fn from_coefficients(&self, coeffs: &[i64]) -> Cyclo<Q> {
        let mut v = vec![Q::zero(); self.m];
        for (i, &c) in coeffs.iter().enumerate() {
            let slot = &mut v[i % self.m];
            *slot = slot.clone() + Q::from_i64(c).unwrap();
        }
        self.reduce(v)
    }

    /// Fold a length-m vector (coefficients of 1..χ^(m-1)) onto the basis
    /// using χ^(m-1) = -(1 + χ + ... + χ^(m-2)).
    fn reduce(&self, mut v: Vec<Q>) -> Cyclo<Q> {
        let top = v.pop().expect("length m");
        if !top.is_zero() {
            for c in v.iter_mut() {
                *c = c.clone() - top.clone();
            }
        }
        Cyclo(v)
    }

    /// Galois automorphism χ ↦ χ^j.
    fn galois(&self, j: usize, x: &Cyclo<Q>) -> Cyclo<Q> {
        let mut v = vec![Q::zero(); self.m];
        for (i, c) in x.0.iter().enumerate() {
            if !c.is_zero() {
                v[i * j % self.m] = c.clone();
            }
        }
        self.reduce(v)
    }

    fn format_coeff_term(c: &Q, mono: &str) -> (bool, String) {
        let negative = c.is_negative();
        let abs = c.abs();
        let body = match (mono.is_empty(), abs.is_one()) {
            (true, _) => abs.to_string(),
            (false, true) => mono.to_string(),
            (false, false) => format!("{abs}*{mono}"),
        };
        (negative, body)
    }
}

impl<Q: CyclotomicCoefficient> Field for Cyclotomic<Q> {
    type Elem = Cyclo<Q>;

    fn zero(&self) -> Cyclo<Q> {
        Cyclo(vec![Q::zero(); self.m - 1])
    }

    fn one(&self) -> Cyclo<Q> {
        self.embed_int(1)
    }

    fn is_zero(&self, x: &Cyclo<Q>) -> bool {
        x.0.iter().all(Zero::is_zero)
    }

    fn add(&self, x: &Cyclo<Q>, y: &Cyclo<Q>) -> Cyclo<Q> {
        Cyclo(x.0.iter().zip(&y.0).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    fn neg(&self, x: &Cyclo<Q>) -> Cyclo<Q> {
        Cyclo(x.0.iter().map(|a| -a.clone()).collect())
    }

    fn sub(&self, x: &Cyclo<Q>, y: &Cyclo<Q>) -> Cyclo<Q> {
        Cyclo(x.0.iter().zip(&y.0).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    fn mul(&self, x: &Cyclo<Q>, y: &Cyclo<Q>) -> Cyclo<Q> {
        // multiply modulo χ^m - 1, then fold the χ^(m-1) coefficient
        let m = self.m;
        let mut v = vec![Q::zero(); m];
        for (i, a) in x.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let slot = &mut v[(i + j) % m];
                *slot = slot.clone() + a.clone() * b.clone();
            }
        }
        self.reduce(v)
    }

    fn inv(&self, x: &Cyclo<Q>) -> Option<Cyclo<Q>> {
        if self.is_zero(x) {
            return None;
        }
        // x · Π_{j≠1} σ_j(x) is the field norm, a rational number
        let others = (2..self.m).fold(self.one(), |acc, j| self.mul(&acc, &self.galois(j, x)));
        let norm = self.mul(x, &others);
        debug_assert!(norm.0[1..].iter().all(Zero::is_zero));
        let n = norm.0[0].clone();
        Some(Cyclo(others.0.into_iter().map(|c| c / n.clone()).collect()))
    }

    fn embed_int(&self, n: i64) -> Cyclo<Q> {
        let mut v = vec![Q::zero(); self.m - 1];
        v[0] = Q::from_i64(n).unwrap();
        Cyclo(v)
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn symbols(&self) -> Vec<(String, Cyclo<Q>)> {
        vec![(self.symbol.clone(), self.root_power(1))]
    }

    fn format(&self, x: &Cyclo<Q>) -> String {
        let mut out = String::new();
        for (i, c) in x.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => self.symbol.clone(),
                _ => format!("{}^{}", self.symbol, i),
            };
            let (negative, body) = Self::format_coeff_term(c, &mono);
            match (out.is_empty(), negative) {
                (true, false) => out.push_str(&body),
                (true, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (false, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (false, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    fn random(&self, rng: &mut dyn RngCore) -> Cyclo<Q> {
        // bounded-height integer coordinates in [-2, 2]
        Cyclo(
            (0..self.m - 1)
                .map(|_| Q::from_i64((rng.next_u32() % 5) as i64 - 2).unwrap())
                .collect(),
        )
    }

    fn describe(&self) -> String {
        format!("Q({}), {} a primitive {}-th root of unity", self.symbol, self.symbol, self.m)
    }
}

impl<Q: CyclotomicCoefficient> SkewField for Cyclotomic<Q> {
    fn order(&self) -> usize {
        self.order
    }

    fn sigma_pow(&self, k: i64, x: &Cyclo<Q>) -> Cyclo<Q> {
        let steps = reduce_exponent(k, self.order);
        if steps == 0 {
            return x.clone();
        }
        let j = (0..steps).fold(1usize, |acc, _| acc * self.exponent % self.m);
        self.galois(j, x)
    }

    fn generator(&self) -> Cyclo<Q> {
        self.root_power(1)
    }

    fn describe_sigma(&self) -> String {
        format!("{s} -> {s}^{}", self.exponent, s = self.symbol)
    }
}
