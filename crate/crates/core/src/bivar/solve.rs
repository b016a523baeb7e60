use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;

use super::{bivar_resultant, bivar_sign_at, bivar_stha_sequence, BivariatePolynomial, Var};
use crate::realalg::{isolate_real_roots, separate, AlgebraicNumber};
use crate::stha::gcd;
use crate::{Error, IntPolynomial, Rational, Result, Sign};

/// `y = numerator(x) / denominator(x)`, where the numerator is
/// `-h_{k,k-1}` and the denominator `k h_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RurWitness {
    pub k: usize,
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
}

impl RurWitness {
    /// Order of `numerator(x) / denominator(x)` against `q`.
    pub fn compare_value(&self, x: &AlgebraicNumber, q: &Rational) -> Ordering {
        let u = &self.numerator.scale(q.denom()) - &self.denominator.scale(q.numer());
        let s = x.sign_at(&u) * x.sign_at(&self.denominator);
        match s {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

/// A real solution of a bivariate system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemSolution {
    pub x: AlgebraicNumber,
    pub y: AlgebraicNumber,
    pub rur_witness: Option<RurWitness>,
}

impl SystemSolution {
    /// Lexicographic order on `(x, y)`.
    pub fn compare(&self, other: &SystemSolution) -> Ordering {
        self.x.compare(&other.x).then_with(|| self.y.compare(&other.y))
    }
}

/// Systems where both polynomials are free of one variable have no isolated
/// solutions: either they share a component or have no common point.
fn degenerate(f: &BivariatePolynomial, g: &BivariatePolynomial) -> Result<Option<Vec<SystemSolution>>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::Domain("zero polynomial"));
    }
    for var in [Var::X, Var::Y] {
        if f.degree_in(var) == Some(0) && g.degree_in(var) == Some(0) {
            let fu = f.as_univariate(var.other()).expect("free of var");
            let gu = g.as_univariate(var.other()).expect("free of var");
            if fu.is_constant() || gu.is_constant() || gcd(&fu, &gu)?.is_constant() {
                return Ok(Some(Vec::new()));
            }
            return Err(Error::CommonComponent);
        }
    }
    Ok(None)
}

fn resultants(f: &BivariatePolynomial, g: &BivariatePolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
    let rx = bivar_resultant(f, g, Var::Y)?;
    let ry = bivar_resultant(f, g, Var::X)?;
    if rx.is_zero() || ry.is_zero() {
        return Err(Error::CommonComponent);
    }
    Ok((rx, ry))
}

fn real_roots(r: &IntPolynomial) -> Result<Vec<AlgebraicNumber>> {
    if r.is_constant() {
        return Ok(Vec::new());
    }
    Ok(isolate_real_roots(r)?.into_iter().map(|r| r.number).collect())
}

/// Real solutions of `F = G = 0` by testing every pair of real roots of the
/// two resultants. Sorted by `x`, then `y`.
pub fn naive_solve(f: &BivariatePolynomial, g: &BivariatePolynomial) -> Result<Vec<SystemSolution>> {
    if let Some(done) = degenerate(f, g)? {
        return Ok(done);
    }
    let (rx, ry) = resultants(f, g)?;
    let xs = real_roots(&rx)?;
    let ys = real_roots(&ry)?;
    let mut out = Vec::new();
    for x in &xs {
        for y in &ys {
            if bivar_sign_at(f, x, y).is_zero() && bivar_sign_at(g, x, y).is_zero() {
                out.push(SystemSolution {
                    x: x.clone(),
                    y: y.clone(),
                    rur_witness: None,
                });
            }
        }
    }
    out.sort_by(SystemSolution::compare);
    Ok(out)
}

/// `true` if no two real solutions share an x-coordinate.
pub fn generic_position_check(f: &BivariatePolynomial, g: &BivariatePolynomial) -> Result<bool> {
    let sols = naive_solve(f, g)?;
    Ok(sols.windows(2).all(|w| w[0].x.compare(&w[1].x) != Ordering::Equal))
}

/// Real solutions of `F = G = 0` by lifting each real root of `Res_Y(F, G)`
/// through the Sturm-Habicht principal coefficients. Where the lifting
/// formula does not apply the candidates above that root are tested
/// directly; two real solutions over one x-coordinate raise
/// [`Error::GenericPosition`]. With `shear = Some(s)`
/// the system `F(X + sY, Y) = G(X + sY, Y) = 0` is solved instead and its
/// solutions are returned as they are.
pub fn rur_solve(f: &BivariatePolynomial, g: &BivariatePolynomial, shear: Option<i64>) -> Result<Vec<SystemSolution>> {
    let (f, g) = match shear {
        Some(s) if s != 0 => {
            let s = BigInt::from(s);
            (f.shear(&s), g.shear(&s))
        }
        _ => (f.clone(), g.clone()),
    };
    if let Some(done) = degenerate(&f, &g)? {
        return Ok(done);
    }
    let (rx, ry) = resultants(&f, &g)?;

    let (f0, g0) = (f.clone(), g.clone());
    let (mut f, mut g) = (f, g);
    let (p, q) = (f.degree_y().unwrap(), g.degree_y().unwrap());
    if p < q {
        core::mem::swap(&mut f, &mut g);
    } else if p == q {
        let lf = BivariatePolynomial::from_univariate(&f.y_coeffs()[p], Var::X);
        let lg = BivariatePolynomial::from_univariate(&g.y_coeffs()[q], Var::X);
        g = &(&lf * &g) - &(&lg * &f);
    }
    let p = f.degree_y().unwrap();
    let lead = f.y_coeffs()[p].clone();
    let seq = bivar_stha_sequence(&f, &g, Var::Y)?;

    let (qs, ys) = separate(&real_roots(&ry)?)?;
    let mut out = Vec::new();
    for x in real_roots(&rx)? {
        match lift(&seq, &lead, p, &x, &qs, &ys) {
            Lift::Solution(lifted) => {
                let (y, witness) = *lifted;
                out.push(SystemSolution {
                    x,
                    y,
                    rur_witness: Some(witness),
                })
            }
            Lift::Skip => {}
            Lift::Irregular => {
                // the lifting formula does not apply above x: test the candidates
                let mut hits = ys
                    .iter()
                    .filter(|y| bivar_sign_at(&f0, &x, y).is_zero() && bivar_sign_at(&g0, &x, y).is_zero());
                if let Some(y) = hits.next() {
                    if hits.next().is_some() {
                        return Err(Error::GenericPosition("two solutions share an x-coordinate"));
                    }
                    out.push(SystemSolution {
                        x: x.clone(),
                        y: y.clone(),
                        rur_witness: None,
                    });
                }
            }
        }
    }
    Ok(out)
}

enum Lift {
    Solution(Box<(AlgebraicNumber, RurWitness)>),
    Skip,
    Irregular,
}

fn lift(
    seq: &super::BivarStHaSequence,
    lead: &IntPolynomial,
    p: usize,
    x: &AlgebraicNumber,
    qs: &[Rational],
    ys: &[AlgebraicNumber],
) -> Lift {
    if x.sign_at(lead).is_zero() {
        return Lift::Irregular;
    }
    // principal coefficients, taking the actual leading coefficient of F for j = p
    let Some(k) = (0..=p).find(|&j| !x.sign_at(&seq.coeff(j, j)).is_zero()) else {
        return Lift::Irregular;
    };
    if k == 0 {
        return Lift::Skip;
    }
    let hk = &seq.coeff(k, k);
    let hk1 = seq.coeff(k, k - 1);
    let kk = BigInt::from(k);
    let den = hk.scale(&kk);
    // the gcd above x must be (Y - y)^k
    for i in 0..k.saturating_sub(1) {
        let e = k - i;
        let lhs = &seq.coeff(k, i) * &den.pow(e);
        let binom = num_integer::binomial(kk.clone(), BigInt::from(i));
        let rhs = &hk.scale(&binom) * &hk1.pow(e);
        if !x.sign_at(&(&lhs - &rhs)).is_zero() {
            return Lift::Irregular;
        }
    }
    let witness = RurWitness {
        k,
        numerator: -&hk1,
        denominator: den,
    };
    let below = qs
        .iter()
        .take_while(|q| witness.compare_value(x, q) == Ordering::Greater)
        .count();
    if below == 0 || below > ys.len() || witness.compare_value(x, &qs[below - 1]) == Ordering::Equal {
        return Lift::Irregular;
    }
    Lift::Solution(Box::new((ys[below - 1].clone(), witness)))
}

/// Solutions of `P = Q = 0` with every `A` in `gt` positive, every `B` in
/// `lt` negative and every `C` in `eq` zero.
pub fn satisfy_bivariate(
    p: &BivariatePolynomial,
    q: &BivariatePolynomial,
    gt: &[BivariatePolynomial],
    lt: &[BivariatePolynomial],
    eq: &[BivariatePolynomial],
) -> Result<Vec<SystemSolution>> {
    let sols = naive_solve(p, q)?;
    Ok(sols
        .into_iter()
        .filter(|s| {
            let sign = |c: &BivariatePolynomial| bivar_sign_at(c, &s.x, &s.y);
            eq.iter().all(|c| sign(c) == Sign::Zero)
                && gt.iter().all(|a| sign(a) == Sign::Positive)
                && lt.iter().all(|b| sign(b) == Sign::Negative)
        })
        .collect())
}
