use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::AlgebraicNumber;
use crate::{Error, IntPolynomial, RatPolynomial, Rational, Result, Sign};

/// `poly(alpha) / denom` in `Q(alpha)`, with `deg poly < deg defining(alpha)`
/// and `denom > 0` coprime to the content of `poly`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtFieldElement {
    poly: IntPolynomial,
    denom: BigInt,
    base: AlgebraicNumber,
}

impl ExtFieldElement {
    /// The image of `poly` in `Q(base)`.
    pub fn new(poly: &IntPolynomial, base: &AlgebraicNumber) -> ExtFieldElement {
        Self::from_fraction(poly, &BigInt::one(), base)
    }

    pub fn from_rational(r: &Rational, base: &AlgebraicNumber) -> ExtFieldElement {
        Self::from_fraction(&IntPolynomial::constant(r.numer().clone()), r.denom(), base)
    }

    fn from_fraction(poly: &IntPolynomial, denom: &BigInt, base: &AlgebraicNumber) -> ExtFieldElement {
        let (_, rem) = poly.div_rem_rational(base.defining());
        let (num, l) = rem.clear_denominators();
        Self::normalized(num, denom * l, base.clone())
    }

    fn from_rat_poly(r: &RatPolynomial, base: &AlgebraicNumber) -> ExtFieldElement {
        let (num, l) = r.clear_denominators();
        Self::from_fraction(&num, &l, base)
    }

    fn normalized(poly: IntPolynomial, mut denom: BigInt, base: AlgebraicNumber) -> ExtFieldElement {
        if poly.is_zero() {
            return ExtFieldElement {
                poly,
                denom: BigInt::one(),
                base,
            };
        }
        if denom.is_negative() {
            denom = -denom;
        }
        let mut poly = poly;
        let g = poly.content().gcd(&denom);
        if !g.is_one() {
            poly = poly.div_exact_scalar(&g).expect("content");
            denom /= &g;
        }
        ExtFieldElement { poly, denom, base }
    }

    pub fn zero(base: &AlgebraicNumber) -> ExtFieldElement {
        Self::new(&IntPolynomial::zero(), base)
    }

    pub fn one(base: &AlgebraicNumber) -> ExtFieldElement {
        Self::new(&IntPolynomial::one(), base)
    }

    /// The generator `alpha` itself.
    pub fn generator(base: &AlgebraicNumber) -> ExtFieldElement {
        Self::new(&IntPolynomial::x(), base)
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn base(&self) -> &AlgebraicNumber {
        &self.base
    }

    fn rebased(&self, base: &AlgebraicNumber) -> ExtFieldElement {
        if base.defining() == self.base.defining() {
            return ExtFieldElement {
                base: base.clone(),
                ..self.clone()
            };
        }
        Self::from_fraction(&self.poly, &self.denom, base)
    }

    /// Bring both operands to one field. Numbers with different defining
    /// polynomials are accepted when they are equal and one polynomial
    /// divides the other.
    fn unify(&self, other: &ExtFieldElement) -> Result<(ExtFieldElement, ExtFieldElement)> {
        let (a, b) = (&self.base, &other.base);
        if a == b {
            return Ok((self.clone(), other.clone()));
        }
        if a.compare(b) != Ordering::Equal {
            return Err(Error::BaseMismatch);
        }
        let base = if a.defining() == b.defining() {
            if a.width() <= b.width() {
                a
            } else {
                b
            }
        } else if a.defining().div_exact(b.defining()).is_some() {
            b
        } else if b.defining().div_exact(a.defining()).is_some() {
            a
        } else {
            return Err(Error::BaseMismatch);
        };
        Ok((self.rebased(base), other.rebased(base)))
    }

    pub fn add(&self, other: &ExtFieldElement) -> Result<ExtFieldElement> {
        let (u, v) = self.unify(other)?;
        let poly = &u.poly.scale(&v.denom) + &v.poly.scale(&u.denom);
        Ok(Self::normalized(poly, &u.denom * &v.denom, u.base))
    }

    pub fn sub(&self, other: &ExtFieldElement) -> Result<ExtFieldElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ExtFieldElement {
        ExtFieldElement {
            poly: -&self.poly,
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &ExtFieldElement) -> Result<ExtFieldElement> {
        let (u, v) = self.unify(other)?;
        Ok(Self::from_fraction(
            &(&u.poly * &v.poly),
            &(&u.denom * &v.denom),
            &u.base,
        ))
    }

    pub fn sign(&self) -> Sign {
        self.base.sign_at(&self.poly)
    }

    pub fn is_zero(&self) -> bool {
        self.sign().is_zero()
    }

    /// Multiplicative inverse. If the defining polynomial turns out not to be
    /// minimal, it is split and the base replaced by the factor vanishing at
    /// `alpha`.
    pub fn inverse(&self) -> Result<ExtFieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut u = self.clone();
        loop {
            let p = u.base.defining().to_rational();
            let (g, s) = ext_gcd(&p, &u.poly.to_rational());
            if g.degree() == Some(0) {
                let c = Rational::from_integer(u.denom.clone()) / g.leading_coeff().unwrap();
                return Ok(Self::from_rat_poly(&s.scale(&c), &u.base));
            }
            let (g, _) = g.clear_denominators();
            let g = g.primitive_part();
            let cofactor = u.base.defining().div_exact(&g).expect("gcd divides").primitive_part();
            let base = split_base(&u.base, &g, &cofactor);
            u = u.rebased(&base);
        }
    }
}

/// The number `alpha` re-anchored on whichever of the coprime factors
/// `g * h = defining(alpha)` vanishes at it.
fn split_base(alpha: &AlgebraicNumber, g: &IntPolynomial, h: &IntPolynomial) -> AlgebraicNumber {
    let vanishes = |f: &IntPolynomial| match alpha.exact() {
        Some(r) => f.sign_at_rational(r).is_zero(),
        None => f.sign_at_rational(alpha.lo()) != f.sign_at_rational(alpha.hi()),
    };
    let f = if vanishes(g) { g } else { h };
    debug_assert!(vanishes(f));
    match alpha.exact() {
        Some(r) => AlgebraicNumber::exact_with(f.clone(), r.clone()),
        None => AlgebraicNumber::from_parts(f.clone(), alpha.lo().clone(), alpha.hi().clone()),
    }
}

/// `(g, s)` with `g = gcd(p, u)` and `s * u = g mod p`, over `Q`.
fn ext_gcd(p: &RatPolynomial, u: &RatPolynomial) -> (RatPolynomial, RatPolynomial) {
    let (mut r0, mut r1) = (p.clone(), u.clone());
    let (mut s0, mut s1) = (RatPolynomial::zero(), RatPolynomial::new(alloc::vec![Rational::one()]));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

pub fn extfield_add(u: &ExtFieldElement, v: &ExtFieldElement) -> Result<ExtFieldElement> {
    u.add(v)
}

pub fn extfield_mul(u: &ExtFieldElement, v: &ExtFieldElement) -> Result<ExtFieldElement> {
    u.mul(v)
}

pub fn extfield_inverse(u: &ExtFieldElement) -> Result<ExtFieldElement> {
    u.inverse()
}

pub fn extfield_sign(u: &ExtFieldElement) -> Sign {
    u.sign()
}
