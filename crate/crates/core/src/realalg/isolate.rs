use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use num_traits::One;

use super::AlgebraicNumber;
use crate::bounds::cauchy_root_bound;
use crate::stha::{square_free_factorization, SturmCounter};
use crate::{IntPolynomial, Rational, Result, Sign};

/// A distinct real root together with its multiplicity in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub number: AlgebraicNumber,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IsolationStats {
    /// Number of interval bisections performed.
    pub subdivisions: usize,
}

/// Isolate the real roots of `f` by Sturm-Habicht bisection, in increasing
/// order, with multiplicities.
pub fn isolate_real_roots(f: &IntPolynomial) -> Result<Vec<IsolatedRoot>> {
    isolate_real_roots_with_stats(f).map(|(roots, _)| roots)
}

struct Counter {
    current: IntPolynomial,
    sturm: SturmCounter,
    cache: BTreeMap<Rational, usize>,
}

impl Counter {
    fn new(p: IntPolynomial) -> Counter {
        Counter {
            sturm: SturmCounter::sturm(&p),
            current: p,
            cache: BTreeMap::new(),
        }
    }

    fn w(&mut self, x: &Rational) -> usize {
        if let Some(&v) = self.cache.get(x) {
            return v;
        }
        let v = self.sturm.w(&x.clone().into());
        self.cache.insert(x.clone(), v);
        v
    }

    fn count(&mut self, lo: &Rational, hi: &Rational) -> usize {
        self.w(lo) - self.w(hi)
    }

    /// Remove the rational root `r` from the polynomial being counted.
    fn deflate(&mut self, r: &Rational) {
        let p = self
            .current
            .div_exact(&IntPolynomial::linear_root(r))
            .expect("rational root gives a primitive linear factor");
        *self = Counter::new(p);
    }
}

pub fn isolate_real_roots_with_stats(f: &IntPolynomial) -> Result<(Vec<IsolatedRoot>, IsolationStats)> {
    let decomposition = square_free_factorization(f)?;
    let red = decomposition.reduced();
    let mut stats = IsolationStats::default();

    let mut bound = cauchy_root_bound(&red)?;
    while red.sign_at_rational(&bound).is_zero() || red.sign_at_rational(&-&bound).is_zero() {
        bound += Rational::one();
    }

    let mut counter = Counter::new(red.clone());
    let mut exact_roots: Vec<Rational> = Vec::new();
    let mut isolated: Vec<AlgebraicNumber> = Vec::new();
    let mut queue = VecDeque::new();
    queue.push_back((-&bound, bound));
    let two = Rational::from_integer(2.into());

    while let Some((lo, hi)) = queue.pop_front() {
        if counter.current.is_constant() {
            break;
        }
        let n = counter.count(&lo, &hi);
        if n == 0 {
            continue;
        }
        // An endpoint may be a root that was found exactly and deflated; such
        // an interval does not yet isolate a sign change of `red`.
        let touches_exact = exact_roots.iter().any(|r| *r == lo || *r == hi);
        if n == 1 && !touches_exact {
            isolated.push(AlgebraicNumber::from_parts(red.clone(), lo, hi));
            continue;
        }
        stats.subdivisions += 1;
        let mid = (&lo + &hi) / &two;
        if red.sign_at_rational(&mid).is_zero() {
            counter.deflate(&mid);
            exact_roots.push(mid.clone());
        }
        queue.push_back((lo, mid.clone()));
        queue.push_back((mid, hi));
    }

    let mut roots: Vec<IsolatedRoot> = exact_roots
        .into_iter()
        .map(|r| AlgebraicNumber::exact_with(red.clone(), r))
        .chain(isolated)
        .map(|number| {
            let multiplicity = multiplicity(&decomposition.factors, &number);
            IsolatedRoot { number, multiplicity }
        })
        .collect();
    roots.sort_by(|a, b| (a.number.lo(), a.number.hi()).cmp(&(b.number.lo(), b.number.hi())));
    Ok((roots, stats))
}

fn multiplicity(factors: &[(IntPolynomial, usize)], a: &AlgebraicNumber) -> usize {
    let hit = |g: &IntPolynomial| match a.exact() {
        Some(r) => g.sign_at_rational(r).is_zero(),
        None => {
            let (s, t) = (g.sign_at_rational(a.lo()), g.sign_at_rational(a.hi()));
            s != t && s != Sign::Zero && t != Sign::Zero
        }
    };
    factors
        .iter()
        .find(|(g, _)| hit(g))
        .map(|(_, m)| *m)
        .expect("every root of the square-free part is a root of one factor")
}
