use clap::{Parser, Subcommand};
use realroots_core::bivar::{self, BivariatePolynomial};
use realroots_core::realalg::{self, AlgebraicNumber};
use realroots_core::{bounds, stha, IntPolynomial};

use crate::parse::{parse_polynomial_with_limit, parse_rational, ParseError, PolynomialExpr};
use crate::record::{render, BoundsRecord, Format, OrderRecord, OutputRecord, SignRecord, SolutionRecord};

const DEFAULT_MAX_DEGREE: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "realroots", version, about = "Exact real roots, signs and bivariate solving")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Naive,
    Rur,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Isolate the real roots of a polynomial in x, with multiplicities.
    Isolate {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Sign of Q at the root of P in [lo, hi].
    SignAt {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        lo: String,
        #[arg(allow_hyphen_values = true)]
        hi: String,
    },
    /// Order of two algebraic numbers: LT, EQ or GT.
    Compare {
        #[arg(allow_hyphen_values = true)]
        p1: String,
        #[arg(allow_hyphen_values = true)]
        lo1: String,
        #[arg(allow_hyphen_values = true)]
        hi1: String,
        #[arg(allow_hyphen_values = true)]
        p2: String,
        #[arg(allow_hyphen_values = true)]
        lo2: String,
        #[arg(allow_hyphen_values = true)]
        hi2: String,
    },
    /// Real solutions of F = G = 0.
    Solve2 {
        #[arg(long, value_enum, default_value_t = Method::Naive)]
        method: Method,
        /// Solve the sheared system F(x + N y, y) = G(x + N y, y) = 0.
        #[arg(long, allow_hyphen_values = true)]
        shear: Option<i64>,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Real roots of P where every --gt is positive, --lt negative, --eq zero.
    Satisfy {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[command(flatten)]
        constraints: Constraints,
    },
    /// Real solutions of P = Q = 0 subject to sign constraints.
    Satisfy2 {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[command(flatten)]
        constraints: Constraints,
    },
    /// Root and separation bounds of a polynomial in x.
    Bounds {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
}

#[derive(Debug, clap::Args)]
pub struct Constraints {
    #[arg(long, allow_hyphen_values = true)]
    gt: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    lt: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    eq: Vec<String>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(ParseError),
    Domain(realroots_core::Error),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e)
    }
}

impl From<realroots_core::Error> for Failure {
    fn from(e: realroots_core::Error) -> Self {
        Failure::Domain(e)
    }
}

struct Ctx {
    max_degree: usize,
}

impl Ctx {
    fn poly(&self, s: &str) -> Result<PolynomialExpr, ParseError> {
        parse_polynomial_with_limit(s, self.max_degree)
    }

    fn bivariate(&self, s: &str) -> Result<BivariatePolynomial, ParseError> {
        Ok(self.poly(s)?.poly)
    }

    fn univariate(&self, s: &str) -> Result<IntPolynomial, ParseError> {
        self.poly(s)?.require_univariate()
    }

    fn number(&self, p: &str, lo: &str, hi: &str) -> Result<AlgebraicNumber, Failure> {
        let p = self.univariate(p)?;
        let (lo, hi) = (parse_rational(lo)?, parse_rational(hi)?);
        Ok(AlgebraicNumber::new(&p, lo, hi)?)
    }

    fn all<T>(&self, items: &[String], f: impl Fn(&Self, &str) -> Result<T, ParseError>) -> Result<Vec<T>, ParseError> {
        items.iter().map(|s| f(self, s)).collect()
    }
}

fn max_degree() -> Result<usize, ParseError> {
    match std::env::var("REALROOTS_MAX_DEGREE") {
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| ParseError::Shape(format!("REALROOTS_MAX_DEGREE must be a natural number, got {v:?}"))),
    }
}

fn execute(cmd: &Command, ctx: &Ctx) -> Result<Vec<OutputRecord>, Failure> {
    Ok(match cmd {
        Command::Isolate { f } => {
            let f = ctx.univariate(f)?;
            realalg::isolate_real_roots(&f)?
                .iter()
                .map(|r| OutputRecord::Root(r.into()))
                .collect()
        }
        Command::SignAt { q, p, lo, hi } => {
            let q = ctx.univariate(q)?;
            let a = ctx.number(p, lo, hi)?;
            vec![OutputRecord::Sign(SignRecord::from(a.sign_at(&q)))]
        }
        Command::Compare {
            p1,
            lo1,
            hi1,
            p2,
            lo2,
            hi2,
        } => {
            let a = ctx.number(p1, lo1, hi1)?;
            let b = ctx.number(p2, lo2, hi2)?;
            vec![OutputRecord::Order(OrderRecord::from(a.compare(&b)))]
        }
        Command::Solve2 { method, shear, f, g } => {
            let (f, g) = (ctx.bivariate(f)?, ctx.bivariate(g)?);
            let sols = match method {
                Method::Naive => {
                    let s = shear.unwrap_or(0).into();
                    bivar::naive_solve(&f.shear(&s), &g.shear(&s))?
                }
                Method::Rur => bivar::rur_solve(&f, &g, *shear)?,
            };
            sols.iter()
                .map(|s| OutputRecord::Solution(SolutionRecord::from(s)))
                .collect()
        }
        Command::Satisfy { p, constraints: c } => {
            let p = ctx.univariate(p)?;
            let uni = |ctx: &Ctx, s: &str| ctx.univariate(s);
            let (gt, lt, eq) = (ctx.all(&c.gt, uni)?, ctx.all(&c.lt, uni)?, ctx.all(&c.eq, uni)?);
            realalg::satisfy_univariate(&p, &gt, &lt, &eq)?
                .iter()
                .map(|r| OutputRecord::Root(r.into()))
                .collect()
        }
        Command::Satisfy2 { p, q, constraints: c } => {
            let (p, q) = (ctx.bivariate(p)?, ctx.bivariate(q)?);
            let bi = |ctx: &Ctx, s: &str| ctx.bivariate(s);
            let (gt, lt, eq) = (ctx.all(&c.gt, bi)?, ctx.all(&c.lt, bi)?, ctx.all(&c.eq, bi)?);
            bivar::satisfy_bivariate(&p, &q, &gt, &lt, &eq)?
                .iter()
                .map(|s| OutputRecord::Solution(SolutionRecord::from(s)))
                .collect()
        }
        Command::Bounds { f } => vec![OutputRecord::Bounds(bounds_record(&ctx.univariate(f)?)?)],
    })
}

/// Separation and Davenport-Mahler bounds refer to the square-free part.
fn bounds_record(f: &IntPolynomial) -> realroots_core::Result<BoundsRecord> {
    let red = stha::square_free_part(f)?;
    let (roots, stats) = realalg::isolate_real_roots_with_stats(f)?;
    let gaps = roots.len().saturating_sub(1) as u64;
    Ok(BoundsRecord {
        degree: f.degree().unwrap_or(0),
        bitsize: bounds::bitsize(f)?,
        cauchy: bounds::cauchy_root_bound(f)?.to_string(),
        mahler: bounds::mahler_measure_upper_bound(f)?.to_string(),
        separation: bounds::separation_lower_bound(&red)?.to_string(),
        davenport_mahler: bounds::davenport_mahler_lower_bound(&red, gaps)?.to_string(),
        real_roots: roots.len(),
        subdivisions: stats.subdivisions,
    })
}

/// Run the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let result = max_degree()
        .map_err(Failure::Usage)
        .and_then(|max_degree| execute(&cli.command, &Ctx { max_degree }));
    match result {
        Ok(records) => Outcome {
            code: 0,
            stdout: render(&records, cli.format),
            stderr: String::new(),
        },
        Err(Failure::Usage(e)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("{}: {}\n", e.tag(), e),
        },
        Err(Failure::Domain(e)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("{}: {}\n", e.tag(), e),
        },
    }
}
