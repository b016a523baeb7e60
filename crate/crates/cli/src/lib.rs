//! Command-line frontend for `realroots-core`: the polynomial grammar, the
//! text and JSON output records, and command dispatch.

mod app;
pub mod parse;
pub mod record;

pub use app::{run, Cli, Command, Method, Outcome};
pub use parse::{parse_polynomial, parse_polynomial_with_limit, parse_rational, ParseError, PolynomialExpr};
pub use record::{decode, render, DecodeError, Format, OutputRecord};
