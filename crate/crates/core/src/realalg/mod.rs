//! Real algebraic numbers in isolating-interval form.
//!
//! [`isolate_real_roots`] produces them from an integer polynomial;
//! [`AlgebraicNumber`] supports refinement, exact sign evaluation of
//! polynomials and exact comparison. [`ExtFieldElement`] does arithmetic in
//! `Q(alpha)`.

mod extfield;
mod ineq;
mod isolate;
mod number;

pub use extfield::{extfield_add, extfield_inverse, extfield_mul, extfield_sign, ExtFieldElement};
pub use ineq::satisfy_univariate;
pub use isolate::{isolate_real_roots, isolate_real_roots_with_stats, IsolatedRoot, IsolationStats};
pub use number::{separating_rationals, AlgebraicNumber};

pub(crate) use number::separate;

/// Exact sign of `q` at `alpha`.
pub fn sign_at(q: &crate::IntPolynomial, alpha: &AlgebraicNumber) -> crate::Sign {
    alpha.sign_at(q)
}

/// Exact order of two algebraic numbers.
pub fn compare(a: &AlgebraicNumber, b: &AlgebraicNumber) -> core::cmp::Ordering {
    a.compare(b)
}

/// Halve the isolating interval of `alpha`.
pub fn refine(alpha: &AlgebraicNumber) -> AlgebraicNumber {
    alpha.refine()
}
