//! Output records and their two encodings.
//!
//! Text: one record per line, `kind key=value ...`, lists comma-separated,
//! rationals as `p/q` (or `p` when integral). JSON: an array of objects with
//! a `kind` field; rationals and coefficients are strings.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use realroots_core::bivar::{RurWitness, SystemSolution};
use realroots_core::realalg::{AlgebraicNumber, IsolatedRoot};
use realroots_core::{IntPolynomial, Rational, Sign};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::parse::parse_rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRecord {
    pub poly: Vec<String>,
    pub lo: String,
    pub hi: String,
    pub mult: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignRecord {
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRecord {
    pub order: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub x_poly: Vec<String>,
    pub x_lo: String,
    pub x_hi: String,
    pub y_poly: Vec<String>,
    pub y_lo: String,
    pub y_hi: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_num: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_den: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRecord {
    pub degree: usize,
    pub bitsize: u64,
    pub cauchy: String,
    pub mahler: String,
    pub separation: String,
    pub davenport_mahler: String,
    pub real_roots: usize,
    pub subdivisions: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OutputRecord {
    Root(RootRecord),
    Sign(SignRecord),
    Order(OrderRecord),
    Solution(SolutionRecord),
    Bounds(BoundsRecord),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("malformed record: {0}")]
    Malformed(String),
    #[error("invalid value in record: {0}")]
    Value(String),
    #[error(transparent)]
    Library(#[from] realroots_core::Error),
}

pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

pub fn poly_strings(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

pub fn poly_from_strings(c: &[String]) -> Result<IntPolynomial, DecodeError> {
    c.iter()
        .map(|s| s.parse::<BigInt>().map_err(|_| DecodeError::Value(s.clone())))
        .collect::<Result<Vec<_>, _>>()
        .map(IntPolynomial::new)
}

fn rational(s: &str) -> Result<Rational, DecodeError> {
    parse_rational(s).map_err(|_| DecodeError::Value(s.to_string()))
}

fn number(poly: &[String], lo: &str, hi: &str) -> Result<AlgebraicNumber, DecodeError> {
    Ok(AlgebraicNumber::new(
        &poly_from_strings(poly)?,
        rational(lo)?,
        rational(hi)?,
    )?)
}

impl RootRecord {
    pub fn new(number: &AlgebraicNumber, mult: usize) -> Self {
        RootRecord {
            poly: poly_strings(number.defining()),
            lo: rational_string(number.lo()),
            hi: rational_string(number.hi()),
            mult,
        }
    }

    pub fn number(&self) -> Result<AlgebraicNumber, DecodeError> {
        number(&self.poly, &self.lo, &self.hi)
    }
}

impl From<&IsolatedRoot> for RootRecord {
    fn from(r: &IsolatedRoot) -> Self {
        RootRecord::new(&r.number, r.multiplicity)
    }
}

impl SignRecord {
    pub fn value(&self) -> Sign {
        Sign::from_i64(self.sign.into())
    }
}

impl From<Sign> for SignRecord {
    fn from(s: Sign) -> Self {
        SignRecord { sign: s.to_i8() }
    }
}

impl OrderRecord {
    pub fn value(&self) -> Result<Ordering, DecodeError> {
        match self.order.as_str() {
            "LT" => Ok(Ordering::Less),
            "EQ" => Ok(Ordering::Equal),
            "GT" => Ok(Ordering::Greater),
            o => Err(DecodeError::Value(o.to_string())),
        }
    }
}

impl From<Ordering> for OrderRecord {
    fn from(o: Ordering) -> Self {
        let s = match o {
            Ordering::Less => "LT",
            Ordering::Equal => "EQ",
            Ordering::Greater => "GT",
        };
        OrderRecord { order: s.to_string() }
    }
}

impl From<&SystemSolution> for SolutionRecord {
    fn from(s: &SystemSolution) -> Self {
        let w = s.rur_witness.as_ref();
        SolutionRecord {
            x_poly: poly_strings(s.x.defining()),
            x_lo: rational_string(s.x.lo()),
            x_hi: rational_string(s.x.hi()),
            y_poly: poly_strings(s.y.defining()),
            y_lo: rational_string(s.y.lo()),
            y_hi: rational_string(s.y.hi()),
            witness_k: w.map(|w| w.k),
            witness_num: w.map(|w| poly_strings(&w.numerator)),
            witness_den: w.map(|w| poly_strings(&w.denominator)),
        }
    }
}

impl SolutionRecord {
    pub fn solution(&self) -> Result<SystemSolution, DecodeError> {
        let rur_witness = match (&self.witness_k, &self.witness_num, &self.witness_den) {
            (Some(k), Some(n), Some(d)) => Some(RurWitness {
                k: *k,
                numerator: poly_from_strings(n)?,
                denominator: poly_from_strings(d)?,
            }),
            (None, None, None) => None,
            _ => return Err(DecodeError::Malformed("incomplete witness".into())),
        };
        Ok(SystemSolution {
            x: number(&self.x_poly, &self.x_lo, &self.x_hi)?,
            y: number(&self.y_poly, &self.y_lo, &self.y_hi)?,
            rur_witness,
        })
    }
}

enum FieldType {
    List,
    Integer,
    Text,
}

fn field_type(key: &str) -> FieldType {
    match key {
        "poly" | "x_poly" | "y_poly" | "witness_num" | "witness_den" => FieldType::List,
        "mult" | "sign" | "witness_k" | "degree" | "bitsize" | "real_roots" | "subdivisions" => FieldType::Integer,
        _ => FieldType::Text,
    }
}

impl OutputRecord {
    fn to_object(&self) -> Map<String, Value> {
        match serde_json::to_value(self).expect("records serialize") {
            Value::Object(m) => m,
            _ => unreachable!("records are objects"),
        }
    }

    /// One line of the text format, without the newline.
    pub fn to_text(&self) -> String {
        let mut line = String::new();
        for (key, value) in self.to_object() {
            let v = match value {
                Value::String(s) => s,
                Value::Number(n) => n.to_string(),
                Value::Array(items) => items
                    .iter()
                    .map(|i| i.as_str().expect("lists hold strings"))
                    .collect::<Vec<_>>()
                    .join(","),
                other => other.to_string(),
            };
            if key == "kind" {
                line.insert_str(0, &v);
            } else {
                line.push(' ');
                line.push_str(&key);
                line.push('=');
                line.push_str(&v);
            }
        }
        line
    }

    pub fn from_text(line: &str) -> Result<OutputRecord, DecodeError> {
        let mut tokens = line.split_whitespace();
        let kind = tokens
            .next()
            .ok_or_else(|| DecodeError::Malformed("empty line".into()))?;
        let mut obj = Map::new();
        obj.insert("kind".into(), Value::String(kind.into()));
        for t in tokens {
            let (key, v) = t.split_once('=').ok_or_else(|| DecodeError::Malformed(t.to_string()))?;
            let value = match field_type(key) {
                FieldType::List if v.is_empty() => Value::Array(Vec::new()),
                FieldType::List => Value::Array(v.split(',').map(|s| Value::String(s.into())).collect()),
                FieldType::Integer => {
                    Value::Number(v.parse::<i64>().map_err(|_| DecodeError::Value(t.to_string()))?.into())
                }
                FieldType::Text => Value::String(v.into()),
            };
            if obj.insert(key.into(), value).is_some() {
                return Err(DecodeError::Malformed(format!("duplicate key {key}")));
            }
        }
        serde_json::from_value(Value::Object(obj)).map_err(|e| DecodeError::Malformed(e.to_string()))
    }
}

impl fmt::Display for OutputRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Render a list of records; text output ends every record with a newline.
pub fn render(records: &[OutputRecord], format: Format) -> String {
    match format {
        Format::Text => records.iter().map(|r| r.to_text() + "\n").collect(),
        Format::Json => serde_json::to_string_pretty(records).expect("records serialize") + "\n",
    }
}

/// Inverse of [`render`].
pub fn decode(output: &str, format: Format) -> Result<Vec<OutputRecord>, DecodeError> {
    match format {
        Format::Text => output
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(OutputRecord::from_text)
            .collect(),
        Format::Json => serde_json::from_str(output).map_err(|e| DecodeError::Malformed(e.to_string())),
    }
}
