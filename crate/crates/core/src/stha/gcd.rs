use alloc::vec::Vec;

use num_bigint::BigInt;

use super::sequence::sequence;
use crate::ring;
use crate::{Error, IntPolynomial, Result};

/// `(-1)^(n(n-1)/2)`, the sign relating `H_0` to the resultant.
fn habicht_sign_is_negative(n: usize) -> bool {
    (n * n.saturating_sub(1) / 2) % 2 == 1
}

/// Sylvester resultant over any coefficient ring, for nonzero inputs.
pub(crate) fn resultant_generic<R: ring::Ring>(a: &[R], b: &[R]) -> R {
    let p = ring::degree(a).expect("nonzero");
    let q = ring::degree(b).expect("nonzero");
    if p < q {
        let r = resultant_generic(b, a);
        return if p * q % 2 == 1 { r.neg() } else { r };
    }
    if q == 0 {
        return b[0].pow(p);
    }
    if p == q {
        let la = ring::lc(a);
        let reduced = ring::sub(&ring::scale(b, &la), &ring::scale(a, &ring::lc(b)));
        let Some(d) = ring::degree(&reduced) else {
            return R::zero();
        };
        return resultant_generic(a, &reduced)
            .div_exact(&la.pow(d))
            .expect("inexact resultant reduction");
    }
    let (polys, _) = sequence(a, b);
    let h0 = ring::coeff(&polys[0], 0);
    if habicht_sign_is_negative(p) {
        h0.neg()
    } else {
        h0
    }
}

/// Resultant of two nonzero polynomials, with the classical sign.
pub fn resultant(a: &IntPolynomial, b: &IntPolynomial) -> Result<BigInt> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Domain("resultant of the zero polynomial"));
    }
    Ok(resultant_generic(a.coeffs(), b.coeffs()))
}

/// Primitive gcd with positive leading coefficient.
pub fn gcd(a: &IntPolynomial, b: &IntPolynomial) -> Result<IntPolynomial> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(Error::Domain("gcd of two zero polynomials")),
        (true, false) => return Ok(b.primitive_part()),
        (false, true) => return Ok(a.primitive_part()),
        _ => {}
    }
    let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
    if a.degree() < b.degree() {
        core::mem::swap(&mut a, &mut b);
    }
    if a.degree() == b.degree() {
        let la = a.leading_coeff().unwrap().clone();
        let lb = b.leading_coeff().unwrap().clone();
        b = &b.scale(&la) - &a.scale(&lb);
    }
    if b.is_zero() {
        return Ok(a);
    }
    let (polys, _) = sequence(a.coeffs(), b.coeffs());
    let last = polys.into_iter().find(|h| !h.is_empty()).expect("A is nonzero");
    Ok(IntPolynomial::new(last).primitive_part())
}

/// `A / gcd(A, A')`, primitive with positive leading coefficient.
pub fn square_free_part(a: &IntPolynomial) -> Result<IntPolynomial> {
    if a.is_constant() {
        return Err(Error::Domain("square-free part of a constant"));
    }
    let g = gcd(a, &a.derivative())?;
    Ok(a.primitive_part().div_exact(&g).expect("gcd divides").primitive_part())
}

/// `f = g_1 g_2^2 ... g_m^m` up to content and sign. Only factors of positive
/// degree are stored, in increasing multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFreeDecomposition {
    pub factors: Vec<(IntPolynomial, usize)>,
}

impl SquareFreeDecomposition {
    /// Product of the stored factors with their multiplicities.
    pub fn expand(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(IntPolynomial::one(), |acc, (g, m)| &acc * &g.pow(*m))
    }

    /// The product of all factors, i.e. the square-free part.
    pub fn reduced(&self) -> IntPolynomial {
        self.factors.iter().fold(IntPolynomial::one(), |acc, (g, _)| &acc * g)
    }
}

/// Yun's square-free factorization.
pub fn square_free_factorization(f: &IntPolynomial) -> Result<SquareFreeDecomposition> {
    if f.is_constant() {
        return Err(Error::Domain("square-free factorization of a constant"));
    }
    let f = f.primitive_part();
    let df = f.derivative();
    let g = gcd(&f, &df)?;
    let mut c = f.div_exact(&g).expect("gcd divides f");
    let mut d = &df.div_exact(&g).expect("gcd divides f'") - &c.derivative();
    let mut factors = Vec::new();
    let mut i = 1;
    while !c.is_constant() {
        let a = gcd(&c, &d)?;
        if !a.is_constant() {
            factors.push((a.clone(), i));
        }
        c = c.div_exact(&a).expect("gcd divides");
        d = &d.div_exact(&a).expect("gcd divides") - &c.derivative();
        i += 1;
    }
    Ok(SquareFreeDecomposition { factors })
}
