//! Root bounds used by isolation and by the test oracles.
//!
//! Every bound is an exact rational. Irrational factors are rounded outward:
//! down inside lower bounds, up inside upper bounds, using 32 fractional bits.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::{Error, IntPolynomial, Rational, Result};

const FRAC_BITS: usize = 32;

fn two_pow(e: usize) -> BigInt {
    BigInt::one() << e
}

/// `sqrt(n)` rounded down to a multiple of `2^-32`.
fn sqrt_down(n: &BigInt) -> Rational {
    let s = (n << (2 * FRAC_BITS)).sqrt();
    Rational::new(s, two_pow(FRAC_BITS))
}

/// `sqrt(n)` rounded up to a multiple of `2^-32`.
fn sqrt_up(n: &BigInt) -> Rational {
    let scaled = n << (2 * FRAC_BITS);
    let mut s = scaled.sqrt();
    if &s * &s < scaled {
        s += 1;
    }
    Rational::new(s, two_pow(FRAC_BITS))
}

/// `n^(e/2)` rounded up.
fn half_pow_up(n: u64, e: u64) -> Rational {
    let n = BigInt::from(n);
    let whole = Rational::from_integer(num_traits::pow(n.clone(), (e / 2) as usize));
    if e.is_multiple_of(2) {
        whole
    } else {
        whole * sqrt_up(&n)
    }
}

/// `n^(e/2)` rounded down.
fn half_pow_down(n: u64, e: u64) -> Rational {
    let n = BigInt::from(n);
    let whole = Rational::from_integer(num_traits::pow(n.clone(), (e / 2) as usize));
    if e.is_multiple_of(2) {
        whole
    } else {
        whole * sqrt_down(&n)
    }
}

fn rpow(x: &Rational, e: u64) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

/// `floor(lg max |a_i|) + 2`.
pub fn bitsize(p: &IntPolynomial) -> Result<u64> {
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.magnitude().bits())
        .max()
        .ok_or(Error::Domain("bitsize of the zero polynomial"))?;
    Ok(max + 1)
}

/// `1 + max |a_i / a_d|`; all real roots lie strictly inside `(-B, B)`.
pub fn cauchy_root_bound(f: &IntPolynomial) -> Result<Rational> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::Domain("Cauchy bound of a constant polynomial")),
    };
    let lead = f.coeffs()[d].abs();
    let max = f.coeffs()[..d].iter().map(Signed::abs).max().unwrap_or_default();
    Ok(Rational::one() + Rational::new(max, lead))
}

/// An upper bound for the Mahler measure, `2^tau * sqrt(d + 1)` rounded up.
pub fn mahler_measure_upper_bound(f: &IntPolynomial) -> Result<Rational> {
    let tau = bitsize(f)?;
    let d = f.degree().expect("nonzero") as u64;
    Ok(Rational::from_integer(two_pow(tau as usize)) * half_pow_up(d + 1, 1))
}

/// Lower bound on the product of `k` gaps between consecutive real roots of a
/// square-free `f` of degree `d`: `M^(1-d) d^(-d/2) (sqrt(3)/d)^k` with `M`
/// replaced by [`mahler_measure_upper_bound`].
pub fn davenport_mahler_lower_bound(f: &IntPolynomial, k: u64) -> Result<Rational> {
    let d = match f.degree() {
        Some(d) if d >= 2 => d as u64,
        _ => return Err(Error::Domain("degree must be at least 2")),
    };
    if k == 0 || k > d - 1 {
        return Err(Error::Domain("k must lie in 1..=d-1"));
    }
    let m = mahler_measure_upper_bound(f)?;
    let num = half_pow_down(3, k);
    let den =
        rpow(&m, d - 1) * half_pow_up(d, d) * Rational::from_integer(num_traits::pow(BigInt::from(d), k as usize));
    Ok(num / den)
}

/// Lower bound on the distance between two distinct roots:
/// `d^(-(d+2)/2) (d+1)^((1-d)/2) 2^(tau(1-d))`, rounded down.
pub fn separation_lower_bound(f: &IntPolynomial) -> Result<Rational> {
    let d = match f.degree() {
        Some(d) if d >= 2 => d as u64,
        _ => return Err(Error::Domain("degree must be at least 2")),
    };
    let tau = bitsize(f)?;
    let den =
        half_pow_up(d, d + 2) * half_pow_up(d + 1, d - 1) * Rational::from_integer(two_pow((tau * (d - 1)) as usize));
    Ok(Rational::one() / den)
}
