//! Polynomial and rational literals as accepted on the command line.
//!
//! ```text
//! poly  := term (('+' | '-') term)*
//! term  := coeff? factor*          (at least one of the two)
//! factor:= '*'? ('x' | 'y') ('^' nat)?
//! coeff := digit+
//! ```
//!
//! A leading sign is allowed, whitespace is ignored and `*` is optional.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use realroots_core::bivar::BivariatePolynomial;
use realroots_core::{IntPolynomial, Rational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{message} at position {position}")]
    Syntax { message: String, position: usize },
    #[error("degree {degree} exceeds the limit {limit}")]
    DegreeLimit { degree: usize, limit: usize },
    #[error("{0}")]
    Shape(String),
}

impl ParseError {
    pub fn tag(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } | ParseError::Shape(_) => "ParseError",
            ParseError::DegreeLimit { .. } => "DegreeLimitError",
        }
    }

    fn at(position: usize, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            message: message.into(),
            position,
        }
    }
}

/// A parsed polynomial together with its source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialExpr {
    pub source: String,
    pub poly: BivariatePolynomial,
}

impl PolynomialExpr {
    /// The polynomial as a univariate polynomial in `x`, if `y` is absent.
    pub fn univariate(&self) -> Option<IntPolynomial> {
        match self.poly.degree_y() {
            None | Some(0) => Some(self.poly.y_coeffs().first().cloned().unwrap_or_default()),
            Some(_) => None,
        }
    }

    /// As [`PolynomialExpr::univariate`], with an error naming the input.
    pub fn require_univariate(&self) -> Result<IntPolynomial, ParseError> {
        self.univariate()
            .ok_or_else(|| ParseError::Shape(format!("expected a polynomial in x only: {:?}", self.source)))
    }
}

struct Lexer {
    chars: Vec<(usize, char)>,
    pos: usize,
    limit: usize,
}

impl Lexer {
    fn new(src: &str, limit: usize) -> Self {
        Lexer {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            limit,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or_else(|| self.chars.last().map_or(0, |&(i, c)| i + c.len_utf8()), |&(i, _)| i)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            None => ParseError::at(self.offset(), "unexpected end of input"),
            Some('.' | '/') => ParseError::at(self.offset(), "only integer coefficients are allowed"),
            Some(c) if c.is_alphabetic() => ParseError::at(self.offset(), format!("unknown variable '{c}'")),
            Some(c) => ParseError::at(self.offset(), format!("unexpected character '{c}'")),
        }
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let at = self.offset();
        let d = self
            .digits()
            .ok_or_else(|| ParseError::at(at, "expected an exponent"))?;
        match d.parse::<usize>() {
            Ok(e) if e <= self.limit => Ok(e),
            _ => Err(ParseError::DegreeLimit {
                degree: d.parse().unwrap_or(usize::MAX),
                limit: self.limit,
            }),
        }
    }

    fn term(&mut self) -> Result<(BigInt, usize, usize), ParseError> {
        let coeff = self.digits();
        let mut seen_factor = false;
        let (mut i, mut j) = (0usize, 0usize);
        loop {
            let save = self.pos;
            let star = self.peek() == Some('*');
            if star {
                if coeff.is_none() && !seen_factor {
                    return Err(self.unexpected());
                }
                self.pos += 1;
            }
            match self.peek() {
                Some('x') => {
                    self.pos += 1;
                    i += self.exponent()?;
                }
                Some('y') => {
                    self.pos += 1;
                    j += self.exponent()?;
                }
                _ if star => return Err(self.unexpected()),
                _ => {
                    self.pos = save;
                    break;
                }
            }
            seen_factor = true;
        }
        if coeff.is_none() && !seen_factor {
            return Err(self.unexpected());
        }
        if i > self.limit || j > self.limit {
            return Err(ParseError::DegreeLimit {
                degree: i.max(j),
                limit: self.limit,
            });
        }
        let c = coeff.map_or_else(BigInt::one, |d| d.parse().expect("digits"));
        Ok((c, i, j))
    }
}

/// Parse with the default degree limit of 64.
pub fn parse_polynomial(text: &str) -> Result<PolynomialExpr, ParseError> {
    parse_polynomial_with_limit(text, 64)
}

/// Parse a polynomial in `x` and `y`, rejecting any exponent or total
/// per-variable degree above `limit`.
pub fn parse_polynomial_with_limit(text: &str, limit: usize) -> Result<PolynomialExpr, ParseError> {
    let mut lx = Lexer::new(text, limit);
    let mut acc: Vec<(BigInt, usize, usize)> = Vec::new();
    let mut first = true;
    while first || lx.peek().is_some() {
        let negative = match lx.peek() {
            Some('+') => {
                lx.pos += 1;
                false
            }
            Some('-') => {
                lx.pos += 1;
                true
            }
            _ if first => false,
            _ => return Err(lx.unexpected()),
        };
        let (c, i, j) = lx.term()?;
        acc.push((if negative { -c } else { c }, i, j));
        first = false;
    }
    let mut poly = BivariatePolynomial::zero();
    for (c, i, j) in acc {
        if !c.is_zero() {
            poly = &poly + &BivariatePolynomial::monomial(c, i, j);
        }
    }
    Ok(PolynomialExpr {
        source: text.to_string(),
        poly,
    })
}

/// `p/q` or an integer.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let t = text.trim();
    let bad = || ParseError::Shape(format!("invalid rational literal {text:?}"));
    let int = |s: &str| -> Result<BigInt, ParseError> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse().map_err(|_| bad())
    };
    match t.split_once('/') {
        None => Ok(Rational::from_integer(int(t)?)),
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(ParseError::Shape(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(int(n)?, d))
        }
    }
}
