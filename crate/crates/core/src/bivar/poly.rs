use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{IntPolynomial, Rational};

/// One of the two variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

/// `sum c_ij X^i Y^j` over the integers, stored as polynomials in `X`
/// indexed by the power of `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    rows: Vec<IntPolynomial>,
}

impl BivariatePolynomial {
    /// From coefficients in `X` of successive powers of `Y`.
    pub fn from_y_coeffs(mut rows: Vec<IntPolynomial>) -> Self {
        while rows.last().is_some_and(IntPolynomial::is_zero) {
            rows.pop();
        }
        BivariatePolynomial { rows }
    }

    /// From coefficients (in the other variable) of successive powers of `var`.
    pub fn from_coeffs_in(coeffs: Vec<IntPolynomial>, var: Var) -> Self {
        let p = Self::from_y_coeffs(coeffs);
        match var {
            Var::Y => p,
            Var::X => p.transpose(),
        }
    }

    /// From a matrix, `m[i][j]` the coefficient of `X^i Y^j`.
    pub fn from_matrix(m: &[Vec<BigInt>]) -> Self {
        let ny = m.iter().map(Vec::len).max().unwrap_or(0);
        Self::from_y_coeffs(
            (0..ny)
                .map(|j| IntPolynomial::new(m.iter().map(|row| row.get(j).cloned().unwrap_or_default()).collect()))
                .collect(),
        )
    }

    /// From `(i, j, c)` triples meaning `c X^i Y^j`; repeated monomials add.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(i, j, c)| {
            &acc + &Self::monomial(BigInt::from(c), i, j)
        })
    }

    pub fn monomial(c: BigInt, i: usize, j: usize) -> Self {
        let mut rows = vec![IntPolynomial::zero(); j];
        rows.push(IntPolynomial::monomial(c, i));
        Self::from_y_coeffs(rows)
    }

    pub fn zero() -> Self {
        BivariatePolynomial { rows: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_y_coeffs(vec![IntPolynomial::constant(c)])
    }

    /// `p(var)`.
    pub fn from_univariate(p: &IntPolynomial, var: Var) -> Self {
        match var {
            Var::X => Self::from_y_coeffs(vec![p.clone()]),
            Var::Y => Self::from_y_coeffs(p.coeffs().iter().map(|c| IntPolynomial::constant(c.clone())).collect()),
        }
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Coefficients in `X` of `Y^0, Y^1, ...`.
    pub fn y_coeffs(&self) -> &[IntPolynomial] {
        &self.rows
    }

    /// Coefficients (in the other variable) of `var^0, var^1, ...`.
    pub fn coeffs_in(&self, var: Var) -> Vec<IntPolynomial> {
        match var {
            Var::Y => self.rows.clone(),
            Var::X => self.transpose().rows,
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.rows.get(j).map(|r| r.coeff(i)).unwrap_or_default()
    }

    /// All nonzero `(i, j, c)` with `c X^i Y^j` a term.
    pub fn terms(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for (j, row) in self.rows.iter().enumerate() {
            for (i, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    pub fn degree_in(&self, var: Var) -> Option<usize> {
        match var {
            Var::Y => self.rows.len().checked_sub(1),
            Var::X => self.rows.iter().filter_map(IntPolynomial::degree).max(),
        }
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.degree_in(Var::X)
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.degree_in(Var::Y)
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms().iter().map(|(i, j, _)| i + j).max()
    }

    /// Swap the roles of `X` and `Y`.
    pub fn transpose(&self) -> Self {
        let n = self.degree_x().map_or(0, |d| d + 1);
        Self::from_y_coeffs(
            (0..n)
                .map(|i| IntPolynomial::new(self.rows.iter().map(|r| r.coeff(i)).collect()))
                .collect(),
        )
    }

    /// The univariate polynomial in `var`, if the other variable is absent.
    pub fn as_univariate(&self, var: Var) -> Option<IntPolynomial> {
        if self.degree_in(var.other()).unwrap_or(0) > 0 {
            return None;
        }
        Some(IntPolynomial::new(
            self.coeffs_in(var).iter().map(|c| c.coeff(0)).collect(),
        ))
    }

    /// Positive multiple of `F(x0, Y)` (for `var == X`) or `F(X, y0)` with
    /// integer coefficients: every coefficient is scaled by `den^deg`.
    pub fn specialize(&self, var: Var, x0: &Rational) -> IntPolynomial {
        let coeffs = self.coeffs_in(var.other());
        let d = self.degree_in(var).unwrap_or(0);
        IntPolynomial::new(
            coeffs
                .iter()
                .map(|c| match c.degree() {
                    None => BigInt::zero(),
                    Some(k) => c.eval_homogeneous(x0) * num_traits::pow(x0.denom().clone(), d - k),
                })
                .collect(),
        )
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.rows
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, r| acc * y + r.eval_rational(x))
    }

    /// `F(X + s Y, Y)`.
    pub fn shear(&self, s: &BigInt) -> Self {
        let lin = &Self::x() + &Self::monomial(s.clone(), 0, 1);
        let mut out = Self::zero();
        for (j, row) in self.rows.iter().enumerate() {
            let yj = Self::monomial(BigInt::one(), 0, j);
            let inner = row
                .coeffs()
                .iter()
                .rev()
                .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()));
            out = &out + &(&inner * &yj);
        }
        out
    }

    pub fn derivative(&self, var: Var) -> Self {
        match var {
            Var::X => Self::from_y_coeffs(self.rows.iter().map(IntPolynomial::derivative).collect()),
            Var::Y => Self::from_y_coeffs(
                self.rows
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(j, r)| r.scale(&BigInt::from(j)))
                    .collect(),
            ),
        }
    }

    /// Remove the largest integer factor, making the leading term positive.
    pub fn primitive_part(&self) -> Self {
        let g = self
            .rows
            .iter()
            .fold(BigInt::zero(), |g, r| num_integer::Integer::gcd(&g, &r.content()));
        if g.is_zero() {
            return self.clone();
        }
        let lead_neg = self
            .rows
            .last()
            .and_then(|r| r.leading_coeff())
            .is_some_and(Signed::is_negative);
        let g = if lead_neg { -g } else { g };
        Self::from_y_coeffs(
            self.rows
                .iter()
                .map(|r| r.div_exact_scalar(&g).expect("content"))
                .collect(),
        )
    }
}

impl Add<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let n = self.rows.len().max(rhs.rows.len());
        BivariatePolynomial::from_y_coeffs(
            (0..n)
                .map(|j| match (self.rows.get(j), rhs.rows.get(j)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) | (None, Some(a)) => a.clone(),
                    (None, None) => IntPolynomial::zero(),
                })
                .collect(),
        )
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            rows: self.rows.iter().map(|r| -r).collect(),
        }
    }
}

impl Sub<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl Mul<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        BivariatePolynomial::from_y_coeffs(crate::ring::mul(&self.rows, &rhs.rows))
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        terms.sort_by_key(|t| core::cmp::Reverse((t.0 + t.1, t.0)));
        for (n, (i, j, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mut parts: Vec<alloc::string::String> = Vec::new();
            if !a.is_one() || (*i == 0 && *j == 0) {
                parts.push(alloc::format!("{a}"));
            }
            for (e, v) in [(*i, "x"), (*j, "y")] {
                match e {
                    0 => {}
                    1 => parts.push(v.into()),
                    _ => parts.push(alloc::format!("{v}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
