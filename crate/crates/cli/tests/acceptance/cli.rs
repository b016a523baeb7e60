//! The documented command-line examples, run through the binary.

use std::process::Command;

use realroots_cli::record::{BoundsRecord, OrderRecord, RootRecord, SignRecord, SolutionRecord};
use realroots_cli::{decode, parse_polynomial, parse_rational, Format, OutputRecord};
use realroots_core::bivar::{self, BivariatePolynomial};
use realroots_core::realalg::{self, AlgebraicNumber};
use realroots_core::{bounds, stha, IntPolynomial};

use crate::{ensure, Outcome};

type Expected = Result<Vec<OutputRecord>, (i32, &'static str)>;

fn uni(s: &str) -> IntPolynomial {
    parse_polynomial(s).unwrap().require_univariate().unwrap()
}

fn bi(s: &str) -> BivariatePolynomial {
    parse_polynomial(s).unwrap().poly
}

fn number(p: &str, lo: &str, hi: &str) -> AlgebraicNumber {
    AlgebraicNumber::new(&uni(p), parse_rational(lo).unwrap(), parse_rational(hi).unwrap()).unwrap()
}

fn roots(r: &[realalg::IsolatedRoot]) -> Vec<OutputRecord> {
    r.iter().map(|r| OutputRecord::Root(RootRecord::from(r))).collect()
}

fn solutions(s: &[bivar::SystemSolution]) -> Vec<OutputRecord> {
    s.iter()
        .map(|s| OutputRecord::Solution(SolutionRecord::from(s)))
        .collect()
}

fn bounds_of(f: &str) -> Vec<OutputRecord> {
    let f = uni(f);
    let red = stha::square_free_part(&f).unwrap();
    let (r, st) = realalg::isolate_real_roots_with_stats(&f).unwrap();
    vec![OutputRecord::Bounds(BoundsRecord {
        degree: f.degree().unwrap(),
        bitsize: bounds::bitsize(&f).unwrap(),
        cauchy: bounds::cauchy_root_bound(&f).unwrap().to_string(),
        mahler: bounds::mahler_measure_upper_bound(&f).unwrap().to_string(),
        separation: bounds::separation_lower_bound(&red).unwrap().to_string(),
        davenport_mahler: bounds::davenport_mahler_lower_bound(&red, r.len() as u64 - 1)
            .unwrap()
            .to_string(),
        real_roots: r.len(),
        subdivisions: st.subdivisions,
    })]
}

fn examples() -> Vec<(Vec<&'static str>, Expected)> {
    let circle = "x^2 + y^2 - 2";
    let sat2 = |gt: &[&str], eq: &[&str]| -> Expected {
        let gt: Vec<_> = gt.iter().map(|s| bi(s)).collect();
        let eq: Vec<_> = eq.iter().map(|s| bi(s)).collect();
        Ok(solutions(
            &bivar::satisfy_bivariate(&bi(circle), &bi("x - y"), &gt, &[], &eq).unwrap(),
        ))
    };
    let sat = |gt: &[&str], eq: &[&str]| -> Expected {
        let gt: Vec<_> = gt.iter().map(|s| uni(s)).collect();
        let eq: Vec<_> = eq.iter().map(|s| uni(s)).collect();
        Ok(roots(
            &realalg::satisfy_univariate(&uni("x^2 - 2"), &gt, &[], &eq).unwrap(),
        ))
    };
    let sign = |q: &str, p: &str, lo: &str, hi: &str| -> Expected {
        Ok(vec![OutputRecord::Sign(SignRecord::from(
            number(p, lo, hi).sign_at(&uni(q)),
        ))])
    };
    let order = |a: AlgebraicNumber, b: AlgebraicNumber| -> Expected {
        Ok(vec![OutputRecord::Order(OrderRecord::from(a.compare(&b)))])
    };
    let naive = |f: &str, g: &str| -> Expected { Ok(solutions(&bivar::naive_solve(&bi(f), &bi(g)).unwrap())) };
    let rur = |f: &str, g: &str| -> Expected { Ok(solutions(&bivar::rur_solve(&bi(f), &bi(g), None).unwrap())) };
    let isolate = |f: &str| -> Expected { Ok(roots(&realalg::isolate_real_roots(&uni(f)).unwrap())) };
    vec![
        (vec!["isolate", "x^2 - 2"], isolate("x^2 - 2")),
        (vec!["isolate", "x^3 - 3x + 2"], isolate("x^3 - 3x + 2")),
        (vec!["isolate", "x^2 + 1"], isolate("x^2 + 1")),
        (
            vec!["sign-at", "x^2 - 3", "x^2 - 2", "0", "3"],
            sign("x^2 - 3", "x^2 - 2", "0", "3"),
        ),
        (
            vec!["sign-at", "x^2 - 2", "x^2 - 2", "0", "3"],
            sign("x^2 - 2", "x^2 - 2", "0", "3"),
        ),
        (
            vec!["sign-at", "7", "x^2 - 2", "0", "3"],
            sign("7", "x^2 - 2", "0", "3"),
        ),
        (
            vec!["compare", "x^2 - 2", "0", "2", "2x - 3", "1", "2"],
            order(number("x^2 - 2", "0", "2"), number("2x - 3", "1", "2")),
        ),
        (
            vec!["compare", "x^2 - 2", "0", "2", "x^4 - 4", "1", "2"],
            order(number("x^2 - 2", "0", "2"), number("x^4 - 4", "1", "2")),
        ),
        (
            vec!["compare", "x - 1", "1", "1", "x - 2", "2", "2"],
            order(number("x - 1", "1", "1"), number("x - 2", "2", "2")),
        ),
        (
            vec!["solve2", "--method", "naive", circle, "y - x"],
            naive(circle, "y - x"),
        ),
        (
            vec!["solve2", "--method", "naive", "x^2 + y^2 + 1", "x - y"],
            naive("x^2 + y^2 + 1", "x - y"),
        ),
        (
            vec!["solve2", "--method", "naive", "y - x^2", "y - 2x"],
            naive("y - x^2", "y - 2x"),
        ),
        (vec!["solve2", "--method", "rur", circle, "y - x"], rur(circle, "y - x")),
        (
            vec!["solve2", "--method", "rur", "y^2 - x", "y - x"],
            rur("y^2 - x", "y - x"),
        ),
        (
            vec!["solve2", "--method", "rur", "y^2 - 1", "x"],
            Err((1, "GenericPositionError")),
        ),
        (vec!["satisfy", "x^2 - 2", "--gt", "x"], sat(&["x"], &[])),
        (vec!["satisfy", "x^2 - 2"], sat(&[], &[])),
        (vec!["satisfy", "x^2 - 2", "--eq", "x - 5"], sat(&[], &["x - 5"])),
        (vec!["satisfy2", circle, "x - y", "--gt", "x"], sat2(&["x"], &[])),
        (vec!["satisfy2", circle, "x - y"], sat2(&[], &[])),
        (
            vec!["satisfy2", circle, "x - y", "--eq", "x + y"],
            sat2(&[], &["x + y"]),
        ),
        (vec!["bounds", "x^2 - 2"], Ok(bounds_of("x^2 - 2"))),
        (vec!["bounds", "2x^3 - 5x + 1"], Ok(bounds_of("2x^3 - 5x + 1"))),
        (
            vec!["bounds", "x^3 - 6x^2 + 11x - 6"],
            Ok(bounds_of("x^3 - 6x^2 + 11x - 6")),
        ),
        (vec!["isolate", "x^2 - 0.5"], Err((2, "ParseError"))),
    ]
}

struct Run {
    code: i32,
    stdout: Vec<u8>,
    stderr: Vec<u8>,
}

fn invoke(args: &[&str], format: &str) -> Result<Run, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_realroots"))
        .arg("--format")
        .arg(format)
        .args(args)
        .env_remove("REALROOTS_MAX_DEGREE")
        .output()
        .map_err(|e| e.to_string())?;
    Ok(Run {
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        stderr: out.stderr,
    })
}

pub fn round_trip() -> Outcome {
    let cases = examples();
    let mut runs = 0;
    for (args, expected) in &cases {
        for (name, format) in [("text", Format::Text), ("json", Format::Json)] {
            let first = invoke(args, name)?;
            let second = invoke(args, name)?;
            runs += 2;
            ensure!(
                first.code == second.code && first.stdout == second.stdout && first.stderr == second.stderr,
                "{args:?} --format {name}: output differs between runs"
            );
            match expected {
                Ok(records) => {
                    ensure!(first.code == 0, "{args:?}: exit {}", first.code);
                    let text = String::from_utf8(first.stdout).map_err(|e| e.to_string())?;
                    let decoded = decode(&text, format).map_err(|e| format!("{args:?}: {e}"))?;
                    ensure!(
                        &decoded == records,
                        "{args:?} --format {name}: records differ from the library"
                    );
                }
                Err((code, tag)) => {
                    ensure!(first.code == *code, "{args:?}: exit {} instead of {code}", first.code);
                    let err = String::from_utf8_lossy(&first.stderr);
                    ensure!(err.starts_with(&format!("{tag}: ")), "{args:?}: stderr {err:?}");
                    ensure!(first.stdout.is_empty(), "{args:?}: output on failure");
                }
            }
        }
    }
    Ok(format!("{} examples, {runs} runs", cases.len()))
}
