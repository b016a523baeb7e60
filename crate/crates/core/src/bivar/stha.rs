use alloc::vec::Vec;

use num_traits::Zero;

use super::{BivariatePolynomial, Var};
use crate::realalg::AlgebraicNumber;
use crate::stha::{generic_sequence, modified_sign_variations, resultant_generic, SignSequence};
use crate::{Error, IntPolynomial, Rational, Result, Sign};

/// Sturm-Habicht sequence of two bivariate polynomials with respect to one
/// variable, coefficients in the polynomial ring of the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivarStHaSequence {
    var: Var,
    polys: Vec<BivariatePolynomial>,
    principal: Vec<IntPolynomial>,
    raw: Vec<Vec<IntPolynomial>>,
}

impl BivarStHaSequence {
    pub fn var(&self) -> Var {
        self.var
    }

    /// `H_j` for `j = 0..=p`.
    pub fn polys(&self) -> &[BivariatePolynomial] {
        &self.polys
    }

    /// Principal coefficients `h_j`, polynomials in the other variable.
    pub fn principal(&self) -> &[IntPolynomial] {
        &self.principal
    }

    /// `H_j` as a list of coefficients of powers of the main variable.
    pub fn coeffs(&self, j: usize) -> &[IntPolynomial] {
        &self.raw[j]
    }

    /// Coefficient of `var^i` in `H_j`, zero when out of range.
    pub fn coeff(&self, j: usize, i: usize) -> IntPolynomial {
        self.raw[j].get(i).cloned().unwrap_or_default()
    }
}

fn check_nonzero(f: &BivariatePolynomial, g: &BivariatePolynomial) -> Result<()> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::Domain("zero polynomial"));
    }
    Ok(())
}

/// Resultant with respect to `var`, a polynomial in the other variable.
pub fn bivar_resultant(f: &BivariatePolynomial, g: &BivariatePolynomial, var: Var) -> Result<IntPolynomial> {
    check_nonzero(f, g)?;
    if f.degree_in(var) == Some(0) && g.degree_in(var) == Some(0) {
        return Err(Error::Domain("both polynomials are constant in the variable"));
    }
    Ok(resultant_generic(&f.coeffs_in(var), &g.coeffs_in(var)))
}

/// Sturm-Habicht sequence of `(F, G)` in `var`; requires `deg F > deg G`.
pub fn bivar_stha_sequence(f: &BivariatePolynomial, g: &BivariatePolynomial, var: Var) -> Result<BivarStHaSequence> {
    let p = f.degree_in(var).ok_or(Error::Precondition("F must be nonzero"))?;
    if g.degree_in(var).is_some_and(|q| q >= p) {
        return Err(Error::Precondition("deg F must exceed deg G in the main variable"));
    }
    let (raw, principal) = generic_sequence(&f.coeffs_in(var), &g.coeffs_in(var));
    let polys = raw
        .iter()
        .map(|h| BivariatePolynomial::from_coeffs_in(h.clone(), var))
        .collect();
    Ok(BivarStHaSequence {
        var,
        polys,
        principal,
        raw,
    })
}

/// Exact sign of `F(alpha, beta)`.
pub fn bivar_sign_at(f: &BivariatePolynomial, alpha: &AlgebraicNumber, beta: &AlgebraicNumber) -> Sign {
    if f.is_zero() {
        return Sign::Zero;
    }
    if let Some(x) = alpha.exact() {
        return beta.sign_at(&f.specialize(Var::X, x));
    }
    if let Some(y) = beta.exact() {
        return alpha.sign_at(&f.specialize(Var::Y, y));
    }
    if let Some(s) = interval_sign(f, alpha, beta) {
        return s;
    }

    // Reduce modulo the defining polynomial of alpha in X by a positive
    // multiple, then drop leading X-coefficients that vanish at beta.
    let a = alpha.defining();
    let a_coeffs: Vec<IntPolynomial> = a.coeffs().iter().map(|c| IntPolynomial::constant(c.clone())).collect();
    let fx = f.coeffs_in(Var::X);
    let mut reduced = crate::ring::prem(&fx, &a_coeffs);
    let da = a.degree().expect("defining polynomial is nonconstant");
    if a.leading_sign() == Sign::Negative && fx.len() > da && (fx.len() - da) % 2 == 1 {
        reduced = reduced.into_iter().map(|c| -c).collect();
    }
    while reduced.last().is_some_and(|c| beta.sign_at(c).is_zero()) {
        reduced.pop();
    }
    if reduced.is_empty() {
        return Sign::Zero;
    }
    if reduced.len() == 1 {
        return beta.sign_at(&reduced[0]);
    }

    // W over the sequence of (A, F~) specialized at the endpoints of alpha,
    // each element a polynomial in Y whose sign is taken at beta.
    let (raw, _) = generic_sequence(&a_coeffs, &reduced);
    let w_at = |x: &Rational| -> usize {
        let signs: Vec<Sign> = raw
            .iter()
            .rev()
            .map(|h| {
                let h = BivariatePolynomial::from_coeffs_in(h.clone(), Var::X);
                beta.sign_at(&h.specialize(Var::X, x))
            })
            .collect();
        modified_sign_variations(&SignSequence::new(signs))
            .expect("Sturm-Habicht evaluation at a non-root is well formed")
    };
    let taq = w_at(alpha.lo()) as i64 - w_at(alpha.hi()) as i64;
    Sign::from_i64(taq) * alpha.derivative_sign()
}

#[derive(Clone)]
struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    fn point(x: Rational) -> Interval {
        Interval { lo: x.clone(), hi: x }
    }

    fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn mul(&self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    fn sign(&self) -> Option<Sign> {
        if self.lo > Rational::zero() {
            Some(Sign::Positive)
        } else if self.hi < Rational::zero() {
            Some(Sign::Negative)
        } else {
            None
        }
    }
}

fn enclose(f: &BivariatePolynomial, x: &Interval, y: &Interval) -> Interval {
    let horner_x = |p: &IntPolynomial| {
        p.coeffs()
            .iter()
            .rev()
            .fold(Interval::point(Rational::zero()), |acc, c| {
                acc.mul(x).add(&Interval::point(Rational::from_integer(c.clone())))
            })
    };
    f.y_coeffs()
        .iter()
        .rev()
        .fold(Interval::point(Rational::zero()), |acc, r| acc.mul(y).add(&horner_x(r)))
}

/// Interval evaluation on the isolating boxes, refining a few times. `None`
/// when the enclosure still contains zero.
fn interval_sign(f: &BivariatePolynomial, alpha: &AlgebraicNumber, beta: &AlgebraicNumber) -> Option<Sign> {
    let (mut a, mut b) = (alpha.clone(), beta.clone());
    for round in 0..6 {
        let x = Interval {
            lo: a.lo().clone(),
            hi: a.hi().clone(),
        };
        let y = Interval {
            lo: b.lo().clone(),
            hi: b.hi().clone(),
        };
        if let Some(s) = enclose(f, &x, &y).sign() {
            return Some(s);
        }
        if round < 5 {
            for _ in 0..4 {
                a = a.refine();
                b = b.refine();
            }
            if a.is_exact() || b.is_exact() {
                return Some(bivar_sign_at(f, &a, &b));
            }
        }
    }
    None
}

/// `true` if `F` has no repeated factor: no repeated factor of positive
/// degree in `Y`, and a square-free content in `Z[X]`.
pub fn is_square_free(f: &BivariatePolynomial) -> bool {
    if f.is_zero() {
        return false;
    }
    let content = f
        .y_coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .try_fold(IntPolynomial::zero(), |g, c| crate::stha::gcd(&g, c).ok())
        .unwrap_or_else(IntPolynomial::one);
    if !content.is_constant() && !crate::stha::gcd(&content, &content.derivative()).is_ok_and(|g| g.is_constant()) {
        return false;
    }
    match f.degree_y() {
        Some(0) | None => true,
        Some(_) => {
            let prim = BivariatePolynomial::from_y_coeffs(
                f.y_coeffs()
                    .iter()
                    .map(|c| c.div_exact(&content).expect("content divides"))
                    .collect(),
            );
            let d = prim.derivative(Var::Y);
            !resultant_generic(prim.y_coeffs(), d.y_coeffs()).is_zero()
        }
    }
}
