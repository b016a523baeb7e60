//! Dense univariate polynomials over `Z` and `Q`.
//!
//! Coefficients are stored low to high and trimmed, so the zero polynomial is
//! the empty vector and `degree() == len - 1` otherwise.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring;
use crate::{Error, Result, Sign};

pub type Rational = BigRational;

/// A point of the extended rational line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedPoint {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl ExtendedPoint {
    pub fn finite(x: Rational) -> Self {
        ExtendedPoint::Finite(x)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtendedPoint::Finite(x) => Some(x),
            _ => None,
        }
    }

    fn rank(&self) -> (i8, Option<&Rational>) {
        match self {
            ExtendedPoint::NegInfinity => (-1, None),
            ExtendedPoint::Finite(x) => (0, Some(x)),
            ExtendedPoint::PosInfinity => (1, None),
        }
    }
}

impl PartialOrd for ExtendedPoint {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedPoint {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl From<Rational> for ExtendedPoint {
    fn from(x: Rational) -> Self {
        ExtendedPoint::Finite(x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatPolynomial {
    coeffs: Vec<Rational>,
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        ring::trim(&mut coeffs);
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k];
        v.push(c);
        Self::new(v)
    }

    /// `X`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// The primitive linear polynomial `den * X - num` vanishing at `r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    /// Product of `den_i * X - num_i` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| &acc * &Self::linear_root(r))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Numerator of `P(p/q) * q^deg`, by homogenized Horner. The value has the
    /// sign of `P(p/q)` because `q > 0`.
    pub(crate) fn eval_homogeneous(&self, x: &Rational) -> BigInt {
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        acc
    }

    /// Exact value of the polynomial at a rational point, Horner order.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let Some(d) = self.degree() else {
            return Rational::zero();
        };
        let num = self.eval_homogeneous(x);
        Rational::new(num, num_traits::pow(x.denom().clone(), d))
    }

    pub fn sign_at_rational(&self, x: &Rational) -> Sign {
        Sign::of_int(&self.eval_homogeneous(x))
    }

    /// Sign of the polynomial at a point of the extended line.
    pub fn sign_at(&self, x: &ExtendedPoint) -> Sign {
        match x {
            ExtendedPoint::Finite(x) => self.sign_at_rational(x),
            ExtendedPoint::PosInfinity => self.leading_sign(),
            ExtendedPoint::NegInfinity => {
                let s = self.leading_sign();
                if self.degree().unwrap_or(0) % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        }
    }

    pub fn leading_sign(&self) -> Sign {
        self.leading_coeff().map_or(Sign::Zero, Sign::of_int)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Content and primitive part, the latter with positive leading coefficient.
    pub fn content_and_primitive(&self) -> Result<(BigInt, IntPolynomial)> {
        if self.is_zero() {
            return Err(Error::Domain("content of the zero polynomial"));
        }
        let mut c = self.content();
        if self.leading_sign() == Sign::Negative {
            c = -c;
        }
        let prim = self.div_exact_scalar(&c).expect("content divides every coefficient");
        Ok((c.abs(), prim))
    }

    /// Primitive part with positive leading coefficient; zero maps to zero.
    pub fn primitive_part(&self) -> IntPolynomial {
        match self.content_and_primitive() {
            Ok((_, p)) => p,
            Err(_) => IntPolynomial::zero(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn div_exact_scalar(&self, c: &BigInt) -> Option<IntPolynomial> {
        ring::div_exact_scalar(&self.coeffs, c).map(IntPolynomial::new)
    }

    /// `self / d` if `d` divides `self` in `Z[X]`.
    pub fn div_exact(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = d.degree()?;
        let Some(ds) = self.degree() else {
            return Some(IntPolynomial::zero());
        };
        if ds < dd {
            return None;
        }
        let lead = d.leading_coeff().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPolynomial::new(quot))
    }

    pub fn pseudo_rem(&self, d: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::new(ring::prem(&self.coeffs, &d.coeffs))
    }

    /// A multiple `c * self mod m` with `c > 0`, so that at every root of `m`
    /// the result has the same sign as `self`.
    pub fn reduce_positive(&self, m: &IntPolynomial) -> IntPolynomial {
        let (Some(ds), Some(dm)) = (self.degree(), m.degree()) else {
            return self.clone();
        };
        if ds < dm {
            return self.clone();
        }
        let r = self.pseudo_rem(m);
        let flips = m.leading_sign() == Sign::Negative && (ds - dm + 1) % 2 == 1;
        let r = if flips { -r } else { r };
        r.primitive_part_keep_sign()
    }

    /// Divide out the (positive) content without touching the sign.
    pub(crate) fn primitive_part_keep_sign(&self) -> IntPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.div_exact_scalar(&c).expect("content divides")
    }

    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial::new(ring::from_int(&self.coeffs))
    }

    /// Quotient and remainder over `Q`.
    pub fn div_rem_rational(&self, d: &IntPolynomial) -> (RatPolynomial, RatPolynomial) {
        self.to_rational().div_rem(&d.to_rational())
    }

    /// `P(X + c)`.
    pub fn shift(&self, c: &BigInt) -> IntPolynomial {
        let lin = IntPolynomial::new(vec![c.clone(), BigInt::one()]);
        self.coeffs.iter().rev().fold(IntPolynomial::zero(), |acc, a| {
            &(&acc * &lin) + &IntPolynomial::constant(a.clone())
        })
    }

    /// Bit size `floor(lg max |a_i|) + 2`.
    pub fn bitsize(&self) -> Result<u64> {
        crate::bounds::bitsize(self)
    }

    pub fn pow(&self, e: usize) -> IntPolynomial {
        ring::Ring::pow(self, e)
    }
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        ring::trim(&mut coeffs);
        RatPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn div_rem(&self, d: &RatPolynomial) -> (RatPolynomial, RatPolynomial) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(ds) = self.degree() else {
            return (RatPolynomial::zero(), RatPolynomial::zero());
        };
        if ds < dd {
            return (RatPolynomial::zero(), self.clone());
        }
        let lead = d.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let q = &rem[k + dd] / lead;
            if q.is_zero() {
                continue;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (RatPolynomial::new(quot), RatPolynomial::new(rem))
    }

    /// `(P, c)` with `P` integral, `c > 0` and `self = P / c`, `P` primitive up
    /// to the common factor with `c`.
    pub fn clear_denominators(&self) -> (IntPolynomial, BigInt) {
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let p = IntPolynomial::new(self.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect());
        (p, l)
    }

    pub fn scale(&self, c: &Rational) -> RatPolynomial {
        RatPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl RatPolynomial {
    pub(crate) fn sub(&self, other: &RatPolynomial) -> RatPolynomial {
        RatPolynomial::new(ring::sub(&self.coeffs, &other.coeffs))
    }

    pub(crate) fn mul(&self, other: &RatPolynomial) -> RatPolynomial {
        RatPolynomial::new(ring::mul(&self.coeffs, &other.coeffs))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:expr) => {
        impl $trait<&IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                let f: fn(&[BigInt], &[BigInt]) -> Vec<BigInt> = $imp;
                IntPolynomial::new(f(&self.coeffs, &rhs.coeffs))
            }
        }
        impl $trait<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => BigInt::zero(),
        })
        .collect()
}

forward_binop!(Add, add, add_slices);
forward_binop!(Sub, sub, ring::sub);
forward_binop!(Mul, mul, ring::mul);

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: ring::neg(&self.coeffs),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

fn write_terms<T: fmt::Display + Signed>(f: &mut fmt::Formatter<'_>, coeffs: &[T], var: &str) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let a = c.abs();
        let unit = a.is_one();
        match (i, unit) {
            (0, _) => write!(f, "{a}")?,
            (_, true) => {}
            (_, false) => write!(f, "{a}*")?,
        }
        match i {
            0 => {}
            1 => write!(f, "{var}")?,
            _ => write!(f, "{var}^{i}")?,
        }
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "x")
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "x")
    }
}
