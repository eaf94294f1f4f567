//! Dense univariate polynomials over a commutative [`Field`], stored lowest
//! degree first with no trailing zeros. Used by the rational-function backend.

use super::Field;

pub fn trim<F: Field + ?Sized>(field: &F, p: &mut Vec<F::Elem>) {
    while p.last().is_some_and(|c| field.is_zero(c)) {
        p.pop();
    }
}

/// Degree, `None` for the zero polynomial.
pub fn degree<E>(p: &[E]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn add<F: Field + ?Sized>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let len = a.len().max(b.len());
    let mut out: Vec<F::Elem> = (0..len)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => field.add(x, y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(field, &mut out);
    out
}

pub fn neg<F: Field + ?Sized>(field: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|c| field.neg(c)).collect()
}

pub fn sub<F: Field + ?Sized>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    add(field, a, &neg(field, b))
}

pub fn scale<F: Field + ?Sized>(field: &F, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
    if field.is_zero(c) {
        return Vec::new();
    }
    a.iter().map(|x| field.mul(x, c)).collect()
}

pub fn mul<F: Field + ?Sized>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = field.add(&out[i + j], &field.mul(x, y));
        }
    }
    trim(field, &mut out);
    out
}

pub fn pow<F: Field + ?Sized>(field: &F, a: &[F::Elem], e: usize) -> Vec<F::Elem> {
    let mut acc = vec![field.one()];
    for _ in 0..e {
        acc = mul(field, &acc, a);
    }
    acc
}

/// Euclidean division `a = q·b + r` with `deg r < deg b`. Panics if `b` is zero.
pub fn divrem<F: Field + ?Sized>(
    field: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let db = degree(b).expect("polynomial division by zero");
    let lead_inv = field.inv(&b[db]).expect("trimmed polynomial has nonzero lead");
    let mut rem = a.to_vec();
    trim(field, &mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![field.zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = field.mul(&rem[dr], &lead_inv);
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] = field.sub(&rem[shift + j], &field.mul(&c, bj));
        }
        quot[shift] = c;
        trim(field, &mut rem);
    }
    trim(field, &mut quot);
    (quot, rem)
}

pub fn monic<F: Field + ?Sized>(field: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(lead) => scale(field, a, &field.inv(lead).expect("nonzero lead")),
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd<F: Field + ?Sized>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(field, &mut x);
    trim(field, &mut y);
    while !y.is_empty() {
        let (_, r) = divrem(field, &x, &y);
        x = y;
        y = r;
    }
    monic(field, &x)
}

pub fn is_one<F: Field + ?Sized>(field: &F, a: &[F::Elem]) -> bool {
    a.len() == 1 && field.is_one(&a[0])
}
