use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use rand::RngCore;

use super::{reduce_exponent, Field, FieldError, SkewField};
use crate::parse::{self, Algebra, ParseError};

/// Largest supported field size; log/antilog tables are allocated eagerly.
pub const MAX_FIELD_SIZE: u64 = 1 << 22;

/// Element of GF(p^d): base-p digits of the coefficient vector in the
/// polynomial basis `1, a, a^2, ...` (digit `i` is the coefficient of `a^i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfElem(pub u32);

impl fmt::Debug for GfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GfElem({})", self.0)
    }
}

/// GF(p^d) = F_p[a]/(modulus) with σ = Frob^e, i.e. σ(x) = x^(p^e).
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

struct Inner {
    p: u32,
    degree: u32,
    size: u32,
    /// Monic modulus, lowest degree first, `degree + 1` entries.
    modulus: Vec<u32>,
    gen_name: String,
    generator: GfElem,
    /// Discrete log of the generator w.r.t. the table base, if it is primitive.
    gen_log_inv: Option<u32>,
    frobenius_power: u32,
    order: usize,
    /// `p^j mod (q - 1)` for `0 <= j < degree`.
    frob_mult: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.inner.p)
            .field("degree", &self.inner.degree)
            .field("modulus", &self.inner.modulus)
            .field("frobenius_power", &self.inner.frobenius_power)
            .finish()
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Raw polynomial arithmetic over F_p used before tables exist.
struct RawField<'a> {
    p: u32,
    degree: u32,
    modulus: &'a [u32],
}

impl RawField<'_> {
    fn digits(&self, x: u32) -> Vec<u32> {
        let mut v = x;
        (0..self.degree)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn mul(&self, x: u32, y: u32) -> u32 {
        let (a, b) = (self.digits(x), self.digits(y));
        let d = self.degree as usize;
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * d];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p;
            }
        }
        // reduce with the monic modulus
        for k in (d..2 * d).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (j, &mj) in self.modulus.iter().enumerate().take(d) {
                let idx = k - d + j;
                prod[idx] = (prod[idx] + (p - c) * mj as u64) % p;
            }
            prod[k] = 0;
        }
        let out: Vec<u32> = prod[..d].iter().map(|&c| c as u32).collect();
        self.encode(&out)
    }

    fn pow(&self, x: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn poly_rem_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = mod_inverse(b[db], p);
    while r.len() > db {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let c = lead * inv % p;
            let shift = r.len() - 1 - db;
            for (j, &bj) in b.iter().enumerate() {
                r[shift + j] = (r[shift + j] + (p - c) * bj % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let ext = (a as i64).extended_gcd(&(p as i64));
    ext.x.rem_euclid(p as i64) as u64
}

/// Trial division by every monic polynomial of degree `1..=d/2`.
fn is_irreducible(modulus: &[u64], p: u64) -> bool {
    let d = modulus.len() - 1;
    for k in 1..=d / 2 {
        let count = p.pow(k as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(k + 1);
            let mut v = idx;
            for _ in 0..k {
                cand.push(v % p);
                v /= p;
            }
            cand.push(1);
            if poly_rem_mod_p(modulus, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The first primitive polynomial of degree `d` over F_p in encoding order.
fn default_modulus(p: u64, d: u32) -> Vec<u64> {
    let q = p.pow(d);
    let factors = prime_factors(q - 1);
    for idx in 0..p.pow(d) {
        let mut m = Vec::with_capacity(d as usize + 1);
        let mut v = idx;
        for _ in 0..d {
            m.push(v % p);
            v /= p;
        }
        m.push(1);
        if m[0] == 0 || !is_irreducible(&m, p) {
            continue;
        }
        let modulus: Vec<u32> = m.iter().map(|&c| c as u32).collect();
        let raw = RawField { p: p as u32, degree: d, modulus: &modulus };
        let gen = if d == 1 { ((p - m[0]) % p) as u32 } else { p as u32 };
        if gen != 0 && factors.iter().all(|&r| raw.pow(gen, (q - 1) / r) != 1) {
            return m;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

impl FiniteField {
    /// Build GF(p^d). `modulus` is the monic defining polynomial lowest
    /// degree first (`d + 1` coefficients); `None` picks the first primitive
    /// polynomial. σ is `Frob^frobenius_power`.
    pub fn new(
        p: u64,
        degree: u32,
        modulus: Option<Vec<u64>>,
        gen_name: &str,
        frobenius_power: u32,
    ) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if degree == 0 {
            return Err(FieldError::ModulusDegree { expected: 1, found: 0 });
        }
        let size = p
            .checked_pow(degree)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or(FieldError::TooLarge { p, degree })?;
        let mut modulus = match modulus {
            Some(m) => m.into_iter().map(|c| c % p).collect::<Vec<_>>(),
            None => default_modulus(p, degree),
        };
        while modulus.last() == Some(&0) {
            modulus.pop();
        }
        if modulus.len() != degree as usize + 1 {
            return Err(FieldError::ModulusDegree {
                expected: degree,
                found: modulus.len().saturating_sub(1),
            });
        }
        let lead_inv = mod_inverse(*modulus.last().unwrap(), p);
        for c in modulus.iter_mut() {
            *c = *c * lead_inv % p;
        }
        if !is_irreducible(&modulus, p) {
            return Err(FieldError::Reducible(format_prime_poly(&modulus, gen_name)));
        }
        let modulus: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();
        let raw = RawField { p: p as u32, degree, modulus: &modulus };
        let generator = if degree == 1 {
            (p as u32 - modulus[0]) % p as u32
        } else {
            p as u32
        };

        let order_q = size - 1;
        let factors = prime_factors(order_q);
        let is_primitive =
            |g: u32| g != 0 && factors.iter().all(|&r| raw.pow(g, order_q / r) != 1);
        let base = if is_primitive(generator) {
            generator
        } else {
            (1..size as u32).find(|&g| is_primitive(g)).expect("field has a primitive element")
        };

        let q1 = order_q as usize;
        let mut exp = vec![0u32; 2 * q1];
        let mut log = vec![0u32; size as usize];
        let mut cur = 1u32;
        for i in 0..q1 {
            exp[i] = cur;
            exp[i + q1] = cur;
            log[cur as usize] = i as u32;
            cur = raw.mul(cur, base);
        }
        let gen_log = if generator == 0 { None } else { Some(log[generator as usize] as u64) };
        let gen_log_inv = gen_log.and_then(|l| {
            let ext = (l as i64).extended_gcd(&(order_q as i64));
            (ext.gcd == 1 || order_q == 1)
                .then(|| ext.x.rem_euclid(order_q.max(1) as i64) as u32)
        });

        let frobenius_power = frobenius_power % degree;
        let order = (degree / (frobenius_power as u64).gcd(&(degree as u64)) as u32) as usize;
        let frob_mult = (0..degree)
            .map(|j| {
                let m = order_q.max(1);
                (0..j).fold(1u64, |acc, _| acc * p % m)
            })
            .collect();

        Ok(FiniteField {
            inner: Arc::new(Inner {
                p: p as u32,
                degree,
                size: size as u32,
                modulus,
                gen_name: gen_name.to_string(),
                generator: GfElem(generator),
                gen_log_inv,
                frobenius_power,
                order: if frobenius_power == 0 { 1 } else { order },
                frob_mult,
                exp,
                log,
            }),
        })
    }

    /// Same as [`FiniteField::new`] with the modulus given in the element
    /// grammar, e.g. `a^12 + a^7 + a^6 + a^5 + a^3 + a + 1`.
    pub fn with_modulus_text(
        p: u64,
        degree: Option<u32>,
        modulus: &str,
        gen_name: &str,
        frobenius_power: u32,
    ) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let coeffs = parse_prime_poly(p, gen_name, modulus)?;
        let found = coeffs.len().saturating_sub(1);
        let degree = degree.unwrap_or(found as u32);
        Self::new(p, degree, Some(coeffs), gen_name, frobenius_power)
    }

    pub fn p(&self) -> u64 {
        self.inner.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.inner.degree
    }

    pub fn size(&self) -> u64 {
        self.inner.size as u64
    }

    pub fn frobenius_power(&self) -> u32 {
        self.inner.frobenius_power
    }

    pub fn generator_name(&self) -> &str {
        &self.inner.gen_name
    }

    /// The modulus in the element grammar.
    pub fn modulus_text(&self) -> String {
        let m: Vec<u64> = self.inner.modulus.iter().map(|&c| c as u64).collect();
        format_prime_poly(&m, &self.inner.gen_name)
    }

    /// `a^k` for the named generator `a`; negative `k` allowed.
    pub fn gen_pow(&self, k: i64) -> GfElem {
        self.pow(&self.inner.generator, k).expect("generator is nonzero")
    }

    /// `k` with `x = a^k` when the named generator is primitive.
    pub fn log_generator(&self, x: GfElem) -> Option<u64> {
        let inv = self.inner.gen_log_inv? as u64;
        if x.0 == 0 {
            return None;
        }
        let q1 = (self.inner.size - 1) as u64;
        Some(self.inner.log[x.0 as usize] as u64 * inv % q1.max(1))
    }

    fn add_digits(&self, x: u32, y: u32, negate_y: bool) -> u32 {
        let p = self.inner.p;
        if p == 2 {
            return x ^ y;
        }
        let (mut a, mut b) = (x, y);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.inner.degree {
            let (da, db) = (a % p, b % p);
            let db = if negate_y { (p - db) % p } else { db };
            out += (da + db) % p * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    fn format_poly_basis(&self, x: u32) -> String {
        let p = self.inner.p;
        let mut digits = Vec::new();
        let mut v = x;
        for _ in 0..self.inner.degree {
            digits.push(v % p);
            v /= p;
        }
        let d: Vec<u64> = digits.iter().map(|&c| c as u64).collect();
        format_prime_poly(&d, &self.inner.gen_name)
    }
}

impl Field for FiniteField {
    type Elem = GfElem;

    fn zero(&self) -> GfElem {
        GfElem(0)
    }

    fn one(&self) -> GfElem {
        GfElem(1)
    }

    fn is_zero(&self, x: &GfElem) -> bool {
        x.0 == 0
    }

    fn add(&self, x: &GfElem, y: &GfElem) -> GfElem {
        GfElem(self.add_digits(x.0, y.0, false))
    }

    fn sub(&self, x: &GfElem, y: &GfElem) -> GfElem {
        GfElem(self.add_digits(x.0, y.0, true))
    }

    fn neg(&self, x: &GfElem) -> GfElem {
        GfElem(self.add_digits(0, x.0, true))
    }

    fn mul(&self, x: &GfElem, y: &GfElem) -> GfElem {
        if x.0 == 0 || y.0 == 0 {
            return GfElem(0);
        }
        let inner = &self.inner;
        GfElem(inner.exp[(inner.log[x.0 as usize] + inner.log[y.0 as usize]) as usize])
    }

    fn inv(&self, x: &GfElem) -> Option<GfElem> {
        if x.0 == 0 {
            return None;
        }
        let inner = &self.inner;
        let q1 = inner.size - 1;
        let l = inner.log[x.0 as usize];
        Some(GfElem(inner.exp[((q1 - l) % q1) as usize]))
    }

    fn pow(&self, x: &GfElem, e: i64) -> Option<GfElem> {
        if x.0 == 0 {
            return match e {
                0 => Some(GfElem(1)),
                e if e > 0 => Some(GfElem(0)),
                _ => None,
            };
        }
        let q1 = (self.inner.size - 1) as i64;
        let l = self.inner.log[x.0 as usize] as i64;
        let idx = (l as i128 * e as i128).rem_euclid(q1 as i128) as usize;
        Some(GfElem(self.inner.exp[idx]))
    }

    fn embed_int(&self, n: i64) -> GfElem {
        GfElem(n.rem_euclid(self.inner.p as i64) as u32)
    }

    fn characteristic(&self) -> u64 {
        self.inner.p as u64
    }

    fn symbols(&self) -> Vec<(String, GfElem)> {
        vec![(self.inner.gen_name.clone(), self.inner.generator)]
    }

    fn format(&self, x: &GfElem) -> String {
        match x.0 {
            0 => "0".to_string(),
            1 => "1".to_string(),
            _ if self.inner.degree == 1 => x.0.to_string(),
            _ => match self.log_generator(*x) {
                Some(1) => self.inner.gen_name.clone(),
                Some(k) => format!("{}^{}", self.inner.gen_name, k),
                None => self.format_poly_basis(x.0),
            },
        }
    }

    fn random(&self, rng: &mut dyn RngCore) -> GfElem {
        GfElem(rng.next_u32() % self.inner.size)
    }

    fn cardinality(&self) -> Option<u64> {
        Some(self.inner.size as u64)
    }

    fn element_at(&self, index: u64) -> Option<GfElem> {
        (index < self.inner.size as u64).then_some(GfElem(index as u32))
    }

    fn describe(&self) -> String {
        format!(
            "GF({}^{}) = F_{}[{}]/({})",
            self.inner.p,
            self.inner.degree,
            self.inner.p,
            self.inner.gen_name,
            self.modulus_text()
        )
    }
}

impl SkewField for FiniteField {
    fn order(&self) -> usize {
        self.inner.order
    }

    fn sigma_pow(&self, k: i64, x: &GfElem) -> GfElem {
        if x.0 == 0 {
            return *x;
        }
        let inner = &self.inner;
        let steps = reduce_exponent(k, inner.order) as u64;
        let j = (steps * inner.frobenius_power as u64 % inner.degree as u64) as usize;
        if j == 0 {
            return *x;
        }
        let q1 = (inner.size - 1) as u64;
        let l = inner.log[x.0 as usize] as u64;
        GfElem(inner.exp[(l * inner.frob_mult[j] % q1) as usize])
    }

    fn generator(&self) -> GfElem {
        self.inner.generator
    }

    fn describe_sigma(&self) -> String {
        let e = self.inner.frobenius_power;
        format!(
            "Frobenius^{e}: {g} -> {g}^{}",
            (self.inner.p as u64).pow(e),
            g = self.inner.gen_name
        )
    }
}

/// Polynomial over F_p in one symbol, used for moduli.
fn format_prime_poly(coeffs: &[u64], symbol: &str) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => symbol.to_string(),
            _ => format!("{symbol}^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

struct PrimePolys<'a> {
    p: u64,
    symbol: &'a str,
}

impl Algebra for PrimePolys<'_> {
    type Value = Vec<u64>;

    fn integer(&self, n: i64) -> Result<Vec<u64>, String> {
        let mut v = vec![n.rem_euclid(self.p as i64) as u64];
        trim_u64(&mut v);
        Ok(v)
    }

    fn symbol(&self, name: &str) -> Option<Vec<u64>> {
        (name == self.symbol).then(|| vec![0, 1])
    }

    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let mut out: Vec<u64> = (0..a.len().max(b.len()))
            .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % self.p)
            .collect();
        trim_u64(&mut out);
        out
    }

    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|&c| (self.p - c) % self.p).collect()
    }

    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim_u64(&mut out);
        out
    }

    fn div(&self, a: &Vec<u64>, b: &Vec<u64>) -> Result<Vec<u64>, String> {
        match b.as_slice() {
            [c] if *c != 0 => {
                let inv = mod_inverse(*c, self.p);
                Ok(a.iter().map(|&x| x * inv % self.p).collect())
            }
            [] => Err("division by zero".into()),
            _ => Err("modulus coefficients must be constants".into()),
        }
    }

    fn pow(&self, a: &Vec<u64>, e: i64) -> Result<Vec<u64>, String> {
        if e < 0 {
            return Err("negative exponent in modulus".into());
        }
        Ok((0..e).fold(vec![1], |acc, _| self.mul(&acc, a)))
    }
}

fn trim_u64(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn parse_prime_poly(p: u64, symbol: &str, text: &str) -> Result<Vec<u64>, ParseError> {
    parse::parse_with(&PrimePolys { p, symbol }, text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::testing::{check_field_axioms, check_order};

    pub(crate) fn gf4096() -> FiniteField {
        FiniteField::with_modulus_text(2, Some(12), "a^12 + a^7 + a^6 + a^5 + a^3 + a + 1", "a", 10)
            .unwrap()
    }

    #[test]
    fn frobenius_power_ten_has_order_six() {
        let f = gf4096();
        assert_eq!(f.order(), 6);
        assert_eq!(f.sigma(&f.generator()), f.gen_pow(1024));
        check_order(&f);
    }

    #[test]
    fn sigma_order_power_is_identity() {
        let f = gf4096();
        let x = f.gen_pow(777);
        assert_eq!(f.sigma_pow(6, &x), x);
        assert_eq!(f.sigma_pow(-1, &x), f.sigma_pow(5, &x));
    }

    #[test]
    fn generator_is_primitive_and_powers_print_as_powers() {
        let f = gf4096();
        let x: GfElem = f.parse("a^2103").unwrap();
        assert_eq!(x, f.gen_pow(2103));
        assert_eq!(f.format(&x), "a^2103");
        // exponents reduce modulo q - 1
        assert_eq!(f.parse("a^6198").unwrap(), x);
        assert_eq!(f.parse("0").unwrap(), f.zero());
        assert_eq!(f.format(&f.gen_pow(1)), "a");
    }

    #[test]
    fn fixed_field_membership() {
        let f = gf4096();
        assert!(f.is_fixed(&f.one()));
        assert!(!f.is_fixed(&f.generator()));
        // σ = Frob^10 of order 6 fixes GF(4) = {0, 1, a^1365, a^2730}
        assert!(f.is_fixed(&f.gen_pow(1365)));
    }

    #[test]
    fn axioms_and_round_trips_gf4096() {
        check_field_axioms(&gf4096(), 11, 1000);
    }

    #[test]
    fn axioms_odd_characteristic_with_nonprimitive_generator() {
        // a^2 + 1 over F_3: a has order 4, so elements print in polynomial form
        let f = FiniteField::with_modulus_text(3, None, "a^2 + 1", "a", 1).unwrap();
        assert_eq!(f.order(), 2);
        assert!(f.log_generator(f.generator()).is_none());
        assert_eq!(f.format(&f.add(&f.generator(), &f.embed_int(2))), "a + 2");
        check_field_axioms(&f, 5, 500);
        check_order(&f);
    }

    #[test]
    fn rejects_reducible_modulus() {
        let err = FiniteField::with_modulus_text(2, None, "a^2 + 1", "a", 1).unwrap_err();
        assert!(matches!(err, FieldError::Reducible(_)));
        assert!(matches!(
            FiniteField::new(4, 1, None, "a", 0),
            Err(FieldError::NotPrime(4))
        ));
    }

    #[test]
    fn default_modulus_is_primitive() {
        let f = FiniteField::new(2, 4, None, "a", 1).unwrap();
        assert_eq!(f.modulus_text(), "a^4 + a + 1");
        assert!(f.log_generator(f.generator()).is_some());
        let f = FiniteField::new(7, 1, None, "g", 0).unwrap();
        assert!(f.log_generator(f.generator()).is_some());
        assert_eq!(f.generator(), GfElem(5));
    }

    #[test]
    fn parse_errors_carry_position() {
        let f = gf4096();
        let err = f.parse("a^3 + + ").unwrap_err();
        assert!(err.position >= 6, "{err:?}");
        assert!(f.parse("b").is_err());
    }
}
