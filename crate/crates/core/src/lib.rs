//! Exact real algebraic number kernel.
//!
//! Everything here works over the integers and rationals with arbitrary
//! precision; no floating point is used. The crate is `no_std` and only needs
//! an allocator.
//!
//! The main entry points:
//!
//! * [`stha`]: Sturm-Habicht sequences, their quotient boot, Tarski queries,
//!   resultants, gcds and square-free factorization.
//! * [`realalg`]: real algebraic numbers in isolating-interval form, root
//!   isolation with multiplicities, sign evaluation, comparison and
//!   arithmetic in `Q(alpha)`.
//! * [`bivar`]: bivariate polynomials, resultants over `Z[X]`, sign
//!   evaluation at a pair of algebraic numbers and real solving of
//!   bivariate systems.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bivar;
pub mod bounds;
mod error;
pub mod poly;
pub mod realalg;
pub(crate) mod ring;
mod sign;
pub mod stha;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use poly::{ExtendedPoint, IntPolynomial, RatPolynomial, Rational};
pub use sign::Sign;
