use alloc::vec::Vec;

use super::boot::QuotientBoot;
use super::{gcd, stha_sequence};
use crate::{Error, ExtendedPoint, IntPolynomial, Result, Sign};

/// Signs of a sequence evaluated at one point, highest index first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignSequence {
    signs: Vec<Sign>,
}

impl SignSequence {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignSequence { signs }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }
}

impl From<Vec<Sign>> for SignSequence {
    fn from(signs: Vec<Sign>) -> Self {
        SignSequence::new(signs)
    }
}

/// Modified sign variations `W` of a Sturm-Habicht evaluation.
///
/// Between two nonzero entries whose product has sign `s`, a run of `2r`
/// zeros counts `r + [s (-1)^r < 0]` and a run of `2r + 1` zeros counts
/// `r + 1`, the latter only being possible when `s = (-1)^(r+1)`. Trailing
/// zeros are ignored.
pub fn modified_sign_variations(s: &SignSequence) -> Result<usize> {
    let signs = s.signs();
    match signs.first() {
        None => return Ok(0),
        Some(Sign::Zero) => return Err(Error::Structure("leading entry is zero")),
        Some(_) => {}
    }
    let mut count = 0;
    let mut prev = signs[0];
    let mut run = 0usize;
    for &x in &signs[1..] {
        if x.is_zero() {
            run += 1;
            continue;
        }
        let s = prev * x;
        let r = run / 2;
        let parity = if r.is_multiple_of(2) {
            Sign::Positive
        } else {
            Sign::Negative
        };
        if run.is_multiple_of(2) {
            count += r + usize::from(s * parity == Sign::Negative);
        } else if s == -parity {
            count += r + 1;
        } else {
            return Err(Error::Structure("odd zero block with inconsistent signs"));
        }
        prev = x;
        run = 0;
    }
    Ok(count)
}

/// Cached Sturm-Habicht data of a square-free `A` and a second polynomial,
/// for repeated `W` evaluations.
#[derive(Debug, Clone)]
pub struct SturmCounter {
    poly: IntPolynomial,
    boot: QuotientBoot,
}

impl SturmCounter {
    /// Counter for the Tarski query of `b` with respect to `a`. The second
    /// polynomial is first replaced by a positive multiple of `b mod a`.
    /// Preconditions on `a` and `b` are not checked here.
    pub(crate) fn new(a: &IntPolynomial, b: &IntPolynomial) -> SturmCounter {
        let b = b.reduce_positive(a);
        let seq = stha_sequence(a, &b).expect("degree reduced");
        SturmCounter {
            poly: a.clone(),
            boot: QuotientBoot::from_sequence(&seq),
        }
    }

    /// Root counter of a square-free polynomial.
    pub(crate) fn sturm(a: &IntPolynomial) -> SturmCounter {
        SturmCounter::new(a, &a.derivative())
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    /// `W` at `x`; `x` must not be a root of `A`.
    pub fn w(&self, x: &ExtendedPoint) -> usize {
        modified_sign_variations(&self.boot.signs_at(x)).expect("Sturm-Habicht evaluation at a non-root is well formed")
    }

    /// `W(a) - W(b)`.
    pub fn query(&self, a: &ExtendedPoint, b: &ExtendedPoint) -> i64 {
        self.w(a) as i64 - self.w(b) as i64
    }
}

fn check_endpoints(a: &IntPolynomial, lo: &ExtendedPoint, hi: &ExtendedPoint) -> Result<()> {
    if lo >= hi {
        return Err(Error::Precondition("interval must satisfy a < b"));
    }
    if a.sign_at(lo).is_zero() && lo.as_finite().is_some() || a.sign_at(hi).is_zero() && hi.as_finite().is_some() {
        return Err(Error::EndpointRoot);
    }
    Ok(())
}

fn check_square_free(a: &IntPolynomial) -> Result<()> {
    match a.degree() {
        None => Err(Error::Precondition("A must be nonzero")),
        Some(0) => Ok(()),
        Some(_) if gcd(a, &a.derivative())?.is_constant() => Ok(()),
        Some(_) => Err(Error::Precondition("A must be square-free")),
    }
}

/// Sum of `sign(A'(g) B(g))` over the real roots `g` of `A` in `(lo, hi)`.
pub fn tarski_query(a: &IntPolynomial, b: &IntPolynomial, lo: &ExtendedPoint, hi: &ExtendedPoint) -> Result<i64> {
    check_square_free(a)?;
    if b.is_zero() || !gcd(a, b)?.is_constant() {
        return Err(Error::Precondition("A and B must be coprime"));
    }
    check_endpoints(a, lo, hi)?;
    if a.is_constant() {
        return Ok(0);
    }
    Ok(SturmCounter::new(a, b).query(lo, hi))
}

/// Number of distinct real roots of a square-free `A` in `(lo, hi)`.
pub fn count_real_roots(a: &IntPolynomial, lo: &ExtendedPoint, hi: &ExtendedPoint) -> Result<usize> {
    check_square_free(a)?;
    check_endpoints(a, lo, hi)?;
    if a.is_constant() {
        return Ok(0);
    }
    Ok(SturmCounter::sturm(a).query(lo, hi) as usize)
}
