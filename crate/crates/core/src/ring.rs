//! Minimal integral-domain abstraction so the subresultant machinery can run
//! over `Z` (univariate) and over `Z[X]` (bivariate, one coefficient
//! variable) with the same code.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::{IntPolynomial, Rational};

pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / d` when the division is exact in the ring.
    fn div_exact(&self, d: &Self) -> Option<Self>;

    fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if Zero::is_zero(d) {
            return None;
        }
        let (q, r) = self.div_rem(d);
        Zero::is_zero(&r).then_some(q)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!Zero::is_zero(d)).then(|| self / d)
    }
}

impl Ring for IntPolynomial {
    fn zero() -> Self {
        IntPolynomial::zero()
    }
    fn one() -> Self {
        IntPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        IntPolynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        IntPolynomial::div_exact(self, d)
    }
}

// Dense polynomials over a ring, coefficients low to high, always trimmed.

pub fn trim<R: Ring>(v: &mut Vec<R>) {
    while v.last().is_some_and(Ring::is_zero) {
        v.pop();
    }
}

pub fn degree<R: Ring>(v: &[R]) -> Option<usize> {
    v.len().checked_sub(1)
}

pub fn lc<R: Ring>(v: &[R]) -> R {
    v.last().cloned().unwrap_or_else(R::zero)
}

pub fn scale<R: Ring>(v: &[R], c: &R) -> Vec<R> {
    if c.is_zero() {
        return Vec::new();
    }
    let mut out: Vec<R> = v.iter().map(|a| a.mul(c)).collect();
    trim(&mut out);
    out
}

pub fn div_exact_scalar<R: Ring>(v: &[R], c: &R) -> Option<Vec<R>> {
    v.iter().map(|a| a.div_exact(c)).collect()
}

pub fn neg<R: Ring>(v: &[R]) -> Vec<R> {
    v.iter().map(Ring::neg).collect()
}

pub fn sub<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.sub(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.neg(),
            (None, None) => R::zero(),
        };
        out.push(x);
    }
    trim(&mut out);
    out
}

/// Pseudo-remainder: `lc(v)^(deg u - deg v + 1) * u mod v`.
pub fn prem<R: Ring>(u: &[R], v: &[R]) -> Vec<R> {
    let dv = degree(v).expect("pseudo-division by zero polynomial");
    let Some(du) = degree(u) else {
        return Vec::new();
    };
    if du < dv {
        let mut out = u.to_vec();
        trim(&mut out);
        return out;
    }
    let lv = lc(v);
    let mut r = u.to_vec();
    let mut steps = du - dv + 1;
    while let Some(dr) = degree(&r) {
        if dr < dv {
            break;
        }
        let lr = lc(&r);
        let shift = dr - dv;
        let mut next: Vec<R> = r.iter().map(|c| c.mul(&lv)).collect();
        for (i, c) in v.iter().enumerate() {
            next[i + shift] = next[i + shift].sub(&c.mul(&lr));
        }
        trim(&mut next);
        r = next;
        steps -= 1;
    }
    if steps > 0 {
        r = scale(&r, &lv.pow(steps));
    }
    r
}

/// Coefficient of `X^j`, zero when out of range.
pub fn coeff<R: Ring>(v: &[R], j: usize) -> R {
    v.get(j).cloned().unwrap_or_else(R::zero)
}

pub fn mul<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    trim(&mut out);
    out
}

pub fn from_int(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|c| Rational::from_integer(c.clone())).collect()
}
