use std::fmt;

use rand::RngCore;

use super::finite::{FiniteField, GfElem};
use super::poly;
use super::{reduce_exponent, Field, FieldError, SkewField};

/// Element of F_q(z) as a reduced fraction with monic denominator.
/// Polynomials are stored lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Vec<GfElem>,
    den: Vec<GfElem>,
}

impl RatFn {
    pub fn numerator(&self) -> &[GfElem] {
        &self.num
    }

    pub fn denominator(&self) -> &[GfElem] {
        &self.den
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n: Vec<u32> = self.num.iter().map(|c| c.0).collect();
        let d: Vec<u32> = self.den.iter().map(|c| c.0).collect();
        write!(f, "RatFn({n:?} / {d:?})")
    }
}

/// Rational function field F_q(z) with σ(z) = (a z + b)/(c z + d), σ fixing F_q.
#[derive(Clone, Debug)]
pub struct RationalFunctionField {
    base: FiniteField,
    var: String,
    /// Möbius coefficients (a, b, c, d).
    mobius: [GfElem; 4],
    /// `mobius^k` for `0 <= k < order`, so σ^k is a single substitution.
    powers: Vec<[GfElem; 4]>,
    order: usize,
}

fn mat_mul(f: &FiniteField, x: &[GfElem; 4], y: &[GfElem; 4]) -> [GfElem; 4] {
    let dot = |a: &GfElem, b: &GfElem, c: &GfElem, d: &GfElem| f.add(&f.mul(a, b), &f.mul(c, d));
    [
        dot(&x[0], &y[0], &x[1], &y[2]),
        dot(&x[0], &y[1], &x[1], &y[3]),
        dot(&x[2], &y[0], &x[3], &y[2]),
        dot(&x[2], &y[1], &x[3], &y[3]),
    ]
}

fn is_scalar(f: &FiniteField, m: &[GfElem; 4]) -> bool {
    f.is_zero(&m[1]) && f.is_zero(&m[2]) && m[0] == m[3]
}

impl RationalFunctionField {
    /// `mobius = (a, b, c, d)` must have `ad - bc != 0`; the order of σ is
    /// the projective order of that matrix.
    pub fn new(base: FiniteField, var: &str, mobius: [GfElem; 4]) -> Result<Self, FieldError> {
        let det = base.sub(&base.mul(&mobius[0], &mobius[3]), &base.mul(&mobius[1], &mobius[2]));
        if base.is_zero(&det) {
            return Err(FieldError::InvalidSigma("Möbius matrix is singular".into()));
        }
        if var == base.generator_name() {
            return Err(FieldError::InvalidSigma(format!(
                "indeterminate '{var}' clashes with the coefficient generator"
            )));
        }
        // PGL(2, q) has order q(q^2 - 1), which bounds the order of any element.
        let q = base.size();
        let bound = (q * (q * q - 1)) as usize;
        let mut powers = vec![[base.one(), base.zero(), base.zero(), base.one()]];
        let mut cur = mobius;
        while !is_scalar(&base, &cur) {
            if powers.len() > bound {
                return Err(FieldError::InvalidSigma("Möbius map has no finite order".into()));
            }
            powers.push(cur);
            cur = mat_mul(&base, &cur, &mobius);
        }
        let order = powers.len();
        let field = RationalFunctionField { base, var: var.to_string(), mobius, powers, order };
        // σ^n(z) = z, σ^k(z) != z for 0 < k < n
        let z = field.variable();
        if field.sigma_pow(order as i64, &z) != z
            || (1..order).any(|k| field.sigma_pow(k as i64, &z) == z)
        {
            return Err(FieldError::InvalidSigma("order check on z failed".into()));
        }
        Ok(field)
    }

    pub fn base(&self) -> &FiniteField {
        &self.base
    }

    pub fn variable_name(&self) -> &str {
        &self.var
    }

    pub fn mobius(&self) -> [GfElem; 4] {
        self.mobius
    }

    /// The indeterminate z.
    pub fn variable(&self) -> RatFn {
        RatFn { num: vec![self.base.zero(), self.base.one()], den: vec![self.base.one()] }
    }

    /// Build `num/den` in canonical form, `None` if `den` is zero.
    pub fn fraction(&self, num: &[GfElem], den: &[GfElem]) -> Option<RatFn> {
        let f = &self.base;
        let mut num = num.to_vec();
        let mut den = den.to_vec();
        poly::trim(f, &mut num);
        poly::trim(f, &mut den);
        if den.is_empty() {
            return None;
        }
        if num.is_empty() {
            return Some(self.zero());
        }
        let g = poly::gcd(f, &num, &den);
        if !poly::is_one(f, &g) {
            num = poly::divrem(f, &num, &g).0;
            den = poly::divrem(f, &den, &g).0;
        }
        let lead_inv = f.inv(den.last().unwrap()).unwrap();
        Some(RatFn { num: poly::scale(f, &num, &lead_inv), den: poly::scale(f, &den, &lead_inv) })
    }

    pub fn constant(&self, c: GfElem) -> RatFn {
        self.fraction(&[c], &[self.base.one()]).unwrap()
    }

    /// Σ p_i (a z + b)^i (c z + d)^(deg - i): the numerator of p(M(z)) after
    /// multiplying through by (c z + d)^deg.
    fn homogenized(&self, p: &[GfElem], m: &[GfElem; 4], deg: usize) -> Vec<GfElem> {
        let f = &self.base;
        let top = [m[1], m[0]];
        let bottom = [m[3], m[2]];
        let mut top_pows = vec![vec![f.one()]];
        let mut bottom_pows = vec![vec![f.one()]];
        for i in 1..=deg {
            top_pows.push(poly::mul(f, &top_pows[i - 1], &top));
            bottom_pows.push(poly::mul(f, &bottom_pows[i - 1], &bottom));
        }
        let mut acc = Vec::new();
        for (i, c) in p.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let term = poly::mul(f, &top_pows[i], &bottom_pows[deg - i]);
            acc = poly::add(f, &acc, &poly::scale(f, &term, c));
        }
        acc
    }

    fn format_poly(&self, p: &[GfElem]) -> String {
        let f = &self.base;
        let mut terms = Vec::new();
        for (i, c) in p.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{}", self.var, i),
            };
            let coeff = f.format(c);
            let coeff = if coeff.contains(' ') { format!("({coeff})") } else { coeff };
            terms.push(match i {
                0 => coeff,
                _ if f.is_one(c) => mono,
                _ => format!("{coeff}*{mono}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl Field for RationalFunctionField {
    type Elem = RatFn;

    fn zero(&self) -> RatFn {
        RatFn { num: Vec::new(), den: vec![self.base.one()] }
    }

    fn one(&self) -> RatFn {
        RatFn { num: vec![self.base.one()], den: vec![self.base.one()] }
    }

    fn is_zero(&self, x: &RatFn) -> bool {
        x.num.is_empty()
    }

    fn add(&self, x: &RatFn, y: &RatFn) -> RatFn {
        let f = &self.base;
        if x.num.is_empty() {
            return y.clone();
        }
        if y.num.is_empty() {
            return x.clone();
        }
        if x.den == y.den {
            return self.fraction(&poly::add(f, &x.num, &y.num), &x.den).unwrap();
        }
        let num = poly::add(f, &poly::mul(f, &x.num, &y.den), &poly::mul(f, &y.num, &x.den));
        self.fraction(&num, &poly::mul(f, &x.den, &y.den)).unwrap()
    }

    fn neg(&self, x: &RatFn) -> RatFn {
        RatFn { num: poly::neg(&self.base, &x.num), den: x.den.clone() }
    }

    fn mul(&self, x: &RatFn, y: &RatFn) -> RatFn {
        let f = &self.base;
        if x.num.is_empty() || y.num.is_empty() {
            return self.zero();
        }
        // cross-cancel first to keep intermediate degrees small
        let g1 = poly::gcd(f, &x.num, &y.den);
        let g2 = poly::gcd(f, &y.num, &x.den);
        let xn = poly::divrem(f, &x.num, &g1).0;
        let yd = poly::divrem(f, &y.den, &g1).0;
        let yn = poly::divrem(f, &y.num, &g2).0;
        let xd = poly::divrem(f, &x.den, &g2).0;
        let num = poly::mul(f, &xn, &yn);
        let den = poly::mul(f, &xd, &yd);
        let lead_inv = f.inv(den.last().unwrap()).unwrap();
        RatFn { num: poly::scale(f, &num, &lead_inv), den: poly::scale(f, &den, &lead_inv) }
    }

    fn inv(&self, x: &RatFn) -> Option<RatFn> {
        if x.num.is_empty() {
            return None;
        }
        let f = &self.base;
        let lead_inv = f.inv(x.num.last().unwrap()).unwrap();
        Some(RatFn { num: poly::scale(f, &x.den, &lead_inv), den: poly::scale(f, &x.num, &lead_inv) })
    }

    fn embed_int(&self, n: i64) -> RatFn {
        self.constant(self.base.embed_int(n))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn symbols(&self) -> Vec<(String, RatFn)> {
        let mut s: Vec<(String, RatFn)> = self
            .base
            .symbols()
            .into_iter()
            .map(|(name, c)| (name, self.constant(c)))
            .collect();
        s.push((self.var.clone(), self.variable()));
        s
    }

    fn format(&self, x: &RatFn) -> String {
        let num = self.format_poly(&x.num);
        if poly::is_one(&self.base, &x.den) {
            return num;
        }
        let den = self.format_poly(&x.den);
        let num = if num.contains(' ') { format!("({num})") } else { num };
        format!("{num}/({den})")
    }

    fn random(&self, rng: &mut dyn RngCore) -> RatFn {
        // ratio of polynomials of degree <= 2
        let f = &self.base;
        loop {
            let num: Vec<GfElem> = (0..3).map(|_| f.random(rng)).collect();
            let den: Vec<GfElem> = (0..3).map(|_| f.random(rng)).collect();
            if let Some(x) = self.fraction(&num, &den) {
                return x;
            }
        }
    }

    fn describe(&self) -> String {
        format!("{}({}) over {}", describe_base(&self.base), self.var, self.base.describe())
    }
}

fn describe_base(f: &FiniteField) -> String {
    format!("F_{}", f.size())
}

impl SkewField for RationalFunctionField {
    fn order(&self) -> usize {
        self.order
    }

    fn sigma_pow(&self, k: i64, x: &RatFn) -> RatFn {
        let k = reduce_exponent(k, self.order);
        if k == 0 || x.num.is_empty() {
            return x.clone();
        }
        let m = &self.powers[k];
        let deg = x.num.len().max(x.den.len()) - 1;
        let num = self.homogenized(&x.num, m, deg);
        let den = self.homogenized(&x.den, m, deg);
        self.fraction(&num, &den).expect("Möbius substitution keeps denominators nonzero")
    }

    fn generator(&self) -> RatFn {
        self.variable()
    }

    fn describe_sigma(&self) -> String {
        let f = &self.base;
        let [a, b, c, d] = self.mobius;
        let lin = |s: &GfElem, t: &GfElem| {
            self.format_poly(&{
                let mut v = vec![*t, *s];
                poly::trim(f, &mut v);
                v
            })
        };
        format!("{v} -> ({})/({})", lin(&a, &b), lin(&c, &d), v = self.var)
    }
}
