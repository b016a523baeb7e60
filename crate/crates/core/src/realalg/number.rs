use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Zero};

use crate::stha::{count_real_roots, square_free_part, SturmCounter};
use crate::{Error, IntPolynomial, Rational, Result, Sign};

/// A real algebraic number given by a square-free integer polynomial and a
/// rational interval containing exactly one of its roots.
///
/// Unless the number is stored as an exact rational, the endpoints are not
/// roots of the defining polynomial and it changes sign across the interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    defining: IntPolynomial,
    lo: Rational,
    hi: Rational,
    exact: Option<Rational>,
    lo_sign: Sign,
}

impl AlgebraicNumber {
    /// The root of `defining` in `[lo, hi]`. The polynomial is replaced by its
    /// square-free part; the closed interval must contain exactly one root.
    pub fn new(defining: &IntPolynomial, lo: Rational, hi: Rational) -> Result<AlgebraicNumber> {
        if defining.is_constant() {
            return Err(Error::Domain("defining polynomial must be nonconstant"));
        }
        if lo > hi {
            return Err(Error::Precondition("interval must satisfy lo <= hi"));
        }
        let p = square_free_part(defining)?;
        let (slo, shi) = (p.sign_at_rational(&lo), p.sign_at_rational(&hi));
        if lo == hi {
            return if slo.is_zero() {
                Ok(AlgebraicNumber::exact_with(p, lo))
            } else {
                Err(Error::Precondition("interval contains no root"))
            };
        }
        let inside = open_count(&p, &lo, &hi)?;
        let total = inside + usize::from(slo.is_zero()) + usize::from(shi.is_zero());
        if total != 1 {
            return Err(Error::Precondition("interval must contain exactly one root"));
        }
        Ok(if slo.is_zero() {
            AlgebraicNumber::exact_with(p, lo)
        } else if shi.is_zero() {
            AlgebraicNumber::exact_with(p, hi)
        } else {
            AlgebraicNumber::from_parts(p, lo, hi)
        })
    }

    /// The rational number `r`, defined by its primitive linear polynomial.
    pub fn from_rational(r: Rational) -> AlgebraicNumber {
        AlgebraicNumber::exact_with(IntPolynomial::linear_root(&r), r)
    }

    pub(crate) fn exact_with(defining: IntPolynomial, r: Rational) -> AlgebraicNumber {
        AlgebraicNumber {
            defining,
            lo: r.clone(),
            hi: r.clone(),
            exact: Some(r),
            lo_sign: Sign::Zero,
        }
    }

    /// Build from an interval already known to isolate a sign change of the
    /// square-free `defining`.
    pub(crate) fn from_parts(defining: IntPolynomial, lo: Rational, hi: Rational) -> AlgebraicNumber {
        let lo_sign = defining.sign_at_rational(&lo);
        debug_assert!(!lo_sign.is_zero() && defining.sign_at_rational(&hi) == -lo_sign);
        if defining.degree() == Some(1) {
            let c = defining.coeffs();
            let r = Rational::new(-c[0].clone(), c[1].clone());
            return AlgebraicNumber::exact_with(defining, r);
        }
        AlgebraicNumber {
            defining,
            lo,
            hi,
            exact: None,
            lo_sign,
        }
    }

    pub fn defining(&self) -> &IntPolynomial {
        &self.defining
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn exact(&self) -> Option<&Rational> {
        self.exact.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Sign of the defining polynomial just right of `lo`.
    pub fn lo_sign(&self) -> Sign {
        self.lo_sign
    }

    /// Sign of the derivative of the defining polynomial at the number.
    pub(crate) fn derivative_sign(&self) -> Sign {
        match &self.exact {
            Some(r) => self.defining.derivative().sign_at_rational(r),
            None => -self.lo_sign,
        }
    }

    /// Halve the interval, or become exact if the midpoint is the root.
    pub fn refine(&self) -> AlgebraicNumber {
        if self.is_exact() {
            return self.clone();
        }
        let mid = (&self.lo + &self.hi) / Rational::from_integer(2.into());
        let s = self.defining.sign_at_rational(&mid);
        let mut out = self.clone();
        if s.is_zero() {
            return AlgebraicNumber::exact_with(out.defining, mid);
        } else if s == self.lo_sign {
            out.lo = mid;
        } else {
            out.hi = mid;
        }
        out
    }

    /// Refine until the interval is no wider than `width`.
    pub fn refine_to(&self, width: &Rational) -> AlgebraicNumber {
        let mut a = self.clone();
        while !a.is_exact() && &a.width() > width {
            a = a.refine();
        }
        a
    }

    /// Exact sign of `q` at this number.
    pub fn sign_at(&self, q: &IntPolynomial) -> Sign {
        if let Some(r) = &self.exact {
            return q.sign_at_rational(r);
        }
        let q = q.reduce_positive(&self.defining);
        if q.is_constant() {
            return q.leading_sign();
        }
        let (slo, shi) = (q.sign_at_rational(&self.lo), q.sign_at_rational(&self.hi));
        if !slo.is_zero() && slo == shi && self.root_free(&q) {
            return slo;
        }
        let counter = SturmCounter::new(&self.defining, &q);
        let taq = counter.query(&self.lo.clone().into(), &self.hi.clone().into());
        Sign::from_i64(taq) * self.derivative_sign()
    }

    /// Cheap sufficient test that `q` has no root in the interval: every
    /// monomial bound of the Taylor expansion at `lo` is dominated.
    fn root_free(&self, q: &IntPolynomial) -> bool {
        let w = self.width();
        let shifted = taylor_at(q, &self.lo);
        let c0 = shifted[0].clone();
        if c0.is_zero() {
            return false;
        }
        let mut rest = Rational::zero();
        let mut wp = Rational::one();
        for c in &shifted[1..] {
            wp *= &w;
            rest += abs(c) * &wp;
        }
        rest < abs(&c0)
    }

    /// Compare two algebraic numbers exactly.
    pub fn compare(&self, other: &AlgebraicNumber) -> Ordering {
        match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => a.cmp(b),
            (Some(a), None) => other.compare_rational(a).reverse(),
            (None, Some(b)) => self.compare_rational(b),
            (None, None) => self.compare_intervals(other),
        }
    }

    /// Order of this number relative to the rational `r`.
    pub fn compare_rational(&self, r: &Rational) -> Ordering {
        if let Some(x) = &self.exact {
            return x.cmp(r);
        }
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        let s = self.defining.sign_at_rational(r);
        if s.is_zero() {
            Ordering::Equal
        } else if s == self.lo_sign {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn compare_intervals(&self, other: &AlgebraicNumber) -> Ordering {
        if self.hi <= other.lo {
            return Ordering::Less;
        }
        if other.hi <= self.lo {
            return Ordering::Greater;
        }
        let l = if self.lo > other.lo { &self.lo } else { &other.lo };
        let h = if self.hi < other.hi { &self.hi } else { &other.hi };
        for r in [l, h] {
            if self.compare_rational(r) == Ordering::Equal {
                return other.compare_rational(r).reverse();
            }
            if other.compare_rational(r) == Ordering::Equal {
                return self.compare_rational(r);
            }
        }
        if self.compare_rational(l) == Ordering::Less {
            return Ordering::Less;
        }
        if other.compare_rational(l) == Ordering::Less {
            return Ordering::Greater;
        }
        if self.compare_rational(h) == Ordering::Greater {
            return Ordering::Greater;
        }
        if other.compare_rational(h) == Ordering::Greater {
            return Ordering::Less;
        }
        // both lie in the common interval, where `other.defining` changes
        // sign only at `other`
        let s = self.sign_at(&other.defining);
        if s.is_zero() {
            Ordering::Equal
        } else if s == other.lo_sign {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// A rational lower and upper bound, strict unless the number is exact.
    pub fn bounds(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }
}

fn abs(x: &Rational) -> Rational {
    if x < &Rational::zero() {
        -x
    } else {
        x.clone()
    }
}

/// Coefficients of `q(x + c)`.
fn taylor_at(q: &IntPolynomial, c: &Rational) -> Vec<Rational> {
    let mut a: Vec<Rational> = q.coeffs().iter().map(|x| Rational::from_integer(x.clone())).collect();
    let n = a.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &a[j + 1] * c;
            a[j] += t;
        }
    }
    a
}

/// Number of roots of the square-free `p` in the open interval `(lo, hi)`,
/// where the endpoints may themselves be roots.
fn open_count(p: &IntPolynomial, lo: &Rational, hi: &Rational) -> Result<usize> {
    let mut p = p.clone();
    for end in [lo, hi] {
        if p.sign_at_rational(end).is_zero() {
            p = p
                .div_exact(&IntPolynomial::linear_root(end))
                .expect("rational root gives a primitive linear factor");
        }
    }
    if p.is_constant() {
        return Ok(0);
    }
    count_real_roots(&p, &lo.clone().into(), &hi.clone().into())
}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "root of {} in ({}, {})", self.defining, self.lo, self.hi),
        }
    }
}

/// Rationals `q_0 < a_1 < q_1 < ... < a_l < q_l` interleaving strictly
/// increasing algebraic numbers.
pub fn separating_rationals(roots: &[AlgebraicNumber]) -> Result<Vec<Rational>> {
    separate(roots).map(|(qs, _)| qs)
}

/// As [`separating_rationals`], also returning the refined numbers.
pub(crate) fn separate(roots: &[AlgebraicNumber]) -> Result<(Vec<Rational>, Vec<AlgebraicNumber>)> {
    if roots.is_empty() {
        return Ok((alloc::vec![Rational::zero()], Vec::new()));
    }
    let mut rs: Vec<AlgebraicNumber> = roots.to_vec();
    for w in rs.windows(2) {
        if w[0].compare(&w[1]) != Ordering::Less {
            return Err(Error::Precondition("roots must be strictly increasing"));
        }
    }
    let one = Rational::one();
    let mut qs = alloc::vec![&rs[0].lo - &one];
    for i in 0..rs.len() - 1 {
        while rs[i].hi >= rs[i + 1].lo {
            if rs[i].width() >= rs[i + 1].width() && !rs[i].is_exact() {
                rs[i] = rs[i].refine();
            } else {
                rs[i + 1] = rs[i + 1].refine();
            }
        }
        qs.push((&rs[i].hi + &rs[i + 1].lo) / Rational::from_integer(2.into()));
    }
    qs.push(&rs[rs.len() - 1].hi + &one);
    Ok((qs, rs))
}
