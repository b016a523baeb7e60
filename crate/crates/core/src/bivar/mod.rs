//! Bivariate integer polynomials and real solving of bivariate systems.
//!
//! Resultants and Sturm-Habicht sequences are computed with one variable
//! as the main variable and coefficients in the integer polynomial ring of
//! the other. Solving comes in two flavours: [`naive_solve`] tests every
//! candidate pair of resultant roots, [`rur_solve`] lifts each x-coordinate
//! through the rational expression given by the principal coefficients.

mod poly;
mod solve;
mod stha;

pub use poly::{BivariatePolynomial, Var};
pub use solve::{generic_position_check, naive_solve, rur_solve, satisfy_bivariate, RurWitness, SystemSolution};
pub use stha::{bivar_resultant, bivar_sign_at, bivar_stha_sequence, is_square_free, BivarStHaSequence};
