//! Reference arithmetic written independently of the library: dense integer
//! polynomials as `Vec<BigInt>` (low to high), Descartes-rule isolation,
//! primitive PRS gcds, rational interval arithmetic and Bareiss determinants.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use realroots_core::{IntPolynomial, Rational};

pub type Poly = Vec<BigInt>;

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn from_i64s(c: &[i64]) -> Poly {
    trim(c.iter().map(|&x| BigInt::from(x)).collect())
}

pub fn from_lib(p: &IntPolynomial) -> Poly {
    trim(p.coeffs().to_vec())
}

pub fn to_lib(p: &[BigInt]) -> IntPolynomial {
    IntPolynomial::new(p.to_vec())
}

pub fn deg(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
            .collect(),
    )
}

pub fn neg(a: &[BigInt]) -> Poly {
    a.iter().map(|c| -c).collect()
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> Poly {
    add(a, &neg(b))
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn product(fs: &[Poly]) -> Poly {
    fs.iter().fold(vec![BigInt::one()], |acc, f| mul(&acc, f))
}

pub fn pow(a: &[BigInt], e: usize) -> Poly {
    product(&vec![a.to_vec(); e])
}

pub fn scale(a: &[BigInt], c: &BigInt) -> Poly {
    trim(a.iter().map(|x| x * c).collect())
}

pub fn derivative(a: &[BigInt]) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
}

/// `den * X - num` for the rational `num / den`.
pub fn linear(r: &Rational) -> Poly {
    vec![-r.numer().clone(), r.denom().clone()]
}

pub fn eval(p: &[BigInt], x: &Rational) -> Rational {
    p.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
}

/// Sign of `p(x)` from the integer value `den^deg p(num/den)`.
pub fn sign(p: &[BigInt], x: &Rational) -> i8 {
    let Some(d) = deg(p) else { return 0 };
    let (n, den) = (x.numer(), x.denom());
    let mut dpow = BigInt::one();
    let mut acc = p[d].clone();
    for i in (0..d).rev() {
        dpow *= den;
        acc = acc * n + &p[i] * &dpow;
    }
    signum(&acc)
}

pub fn signum(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub fn qsign(x: &Rational) -> i8 {
    signum(x.numer())
}

pub fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with a positive leading coefficient.
pub fn primitive(p: &[BigInt]) -> Poly {
    let p = trim(p.to_vec());
    let Some(d) = deg(&p) else { return p };
    let mut c = content(&p);
    if p[d].is_negative() {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

/// `lc(b)^(deg a - deg b + 1) a mod b`.
pub fn prem(a: &[BigInt], b: &[BigInt]) -> Poly {
    let db = deg(b).expect("nonzero divisor");
    let lb = b[db].clone();
    let mut r = trim(a.to_vec());
    let Some(da) = deg(&r) else { return r };
    if da < db {
        return r;
    }
    for _ in 0..=(da - db) {
        r = scale(&r, &lb);
        if let Some(dr) = deg(&r) {
            if dr >= db {
                let c = r[dr].clone() / &lb;
                for (i, bc) in b.iter().enumerate() {
                    r[i + dr - db] -= &c * bc;
                }
                r = trim(r);
            }
        }
    }
    r
}

/// Primitive gcd by the primitive polynomial remainder sequence.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Poly {
    let (mut a, mut b) = (primitive(a), primitive(b));
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    while deg(&b).is_some() {
        let r = primitive(&prem(&a, &b));
        a = b;
        b = r;
    }
    primitive(&a)
}

/// Exact quotient over Z; panics if `b` does not divide `a`.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Poly {
    let db = deg(b).expect("nonzero divisor");
    let mut r = trim(a.to_vec());
    let Some(da) = deg(&r) else { return r };
    assert!(da >= db, "divisor degree too large");
    let mut out = vec![BigInt::zero(); da - db + 1];
    while let Some(dr) = deg(&r) {
        assert!(dr >= db, "inexact division");
        let (c, rem) = r[dr].div_rem(&b[db]);
        assert!(rem.is_zero(), "inexact division");
        for (i, bc) in b.iter().enumerate() {
            r[i + dr - db] -= &c * bc;
        }
        out[dr - db] = c;
        r = trim(r);
    }
    trim(out)
}

/// Primitive square-free part.
pub fn square_free(p: &[BigInt]) -> Poly {
    let g = gcd(p, &derivative(p));
    primitive(&div_exact(&primitive(p), &g))
}

pub fn is_square_free(p: &[BigInt]) -> bool {
    deg(&gcd(p, &derivative(p))) == Some(0)
}

fn rtrim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// `p(X + c)` by repeated Horner steps.
fn taylor_shift(p: &[Rational], c: &Rational) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for a in p.iter().rev() {
        // out = out * (X + c) + a
        let mut next = vec![Rational::zero(); out.len() + 1];
        for (i, o) in out.iter().enumerate() {
            next[i + 1] += o;
            next[i] += o * c;
        }
        next[0] += a;
        out = next;
    }
    rtrim(out)
}

/// Sign variations of `(X + 1)^d p((a X + b) / (X + 1))`: an upper bound on
/// the roots of `p` in the open interval `(a, b)` with the same parity, and
/// exact when it is 0 or 1.
pub fn descartes(p: &[BigInt], a: &Rational, b: &Rational) -> usize {
    let pq: Vec<Rational> = p.iter().map(|c| Rational::from_integer(c.clone())).collect();
    let shifted = taylor_shift(&pq, a);
    let w = b - a;
    let mut wp = Rational::one();
    let mut scaled = Vec::with_capacity(shifted.len());
    for c in shifted {
        scaled.push(c * &wp);
        wp *= &w;
    }
    scaled.reverse();
    let t = taylor_shift(&scaled, &Rational::one());
    let signs: Vec<i8> = t.iter().map(qsign).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// A real root of a square-free integer polynomial: either an exact rational
/// (`lo == hi`) or the unique root in `(lo, hi)` with nonzero, opposite
/// signs at the endpoints.
#[derive(Debug, Clone)]
pub struct Root {
    pub p: Poly,
    pub lo: Rational,
    pub hi: Rational,
}

impl Root {
    pub fn exact(r: Rational) -> Root {
        Root {
            p: linear(&r),
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn bisect(&mut self) {
        if self.is_exact() {
            return;
        }
        let m = (&self.lo + &self.hi) / qi(2);
        let s = sign(&self.p, &m);
        if s == 0 {
            self.lo = m.clone();
            self.hi = m;
        } else if s == sign(&self.p, &self.lo) {
            self.lo = m;
        } else {
            self.hi = m;
        }
    }

    pub fn refine_to(&mut self, width: &Rational) {
        while !self.is_exact() && &self.width() > width {
            self.bisect();
        }
    }

    /// Exact order of the root against a rational.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        if x < &self.lo {
            return Ordering::Greater;
        }
        if x > &self.hi {
            return Ordering::Less;
        }
        if self.is_exact() {
            return self.lo.cmp(x);
        }
        if x == &self.lo {
            return Ordering::Greater;
        }
        if x == &self.hi {
            return Ordering::Less;
        }
        match sign(&self.p, x) {
            0 => Ordering::Equal,
            s if s == sign(&self.p, &self.lo) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

/// Isolating intervals (or exact points) for the real roots of a square-free
/// `p`, in increasing order.
pub fn isolate(p: &[BigInt]) -> Vec<Root> {
    let p = primitive(p);
    let Some(d) = deg(&p) else { return Vec::new() };
    if d == 0 {
        return Vec::new();
    }
    let lc = Rational::from_integer(p[d].abs());
    let m = p[..d]
        .iter()
        .map(|c| Rational::from_integer(c.abs()) / &lc)
        .max()
        .unwrap_or_default();
    let b = m + qi(2);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let v = descartes(&p, &lo, &hi);
        if v == 0 {
            continue;
        }
        if v == 1 && sign(&p, &lo) != 0 && sign(&p, &hi) != 0 {
            out.push(Root { p: p.clone(), lo, hi });
            continue;
        }
        let mid = (&lo + &hi) / qi(2);
        if sign(&p, &mid) == 0 {
            out.push(Root {
                p: p.clone(),
                lo: mid.clone(),
                hi: mid.clone(),
            });
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Enclosure of `p` over `[lo, hi]` by interval Horner evaluation.
pub fn interval_eval(p: &[BigInt], lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut acc = (Rational::zero(), Rational::zero());
    for c in p.iter().rev() {
        let prods = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
        let mn = prods.iter().min().unwrap().clone();
        let mx = prods.iter().max().unwrap().clone();
        let c = Rational::from_integer(c.clone());
        acc = (mn + &c, mx + &c);
    }
    acc
}

/// `true` if the square-free divisor `g` of `root.p` vanishes at the root.
fn divisor_vanishes(g: &[BigInt], root: &Root) -> bool {
    if deg(g).unwrap_or(0) == 0 {
        return false;
    }
    if root.is_exact() {
        return sign(g, &root.lo) == 0;
    }
    sign(g, &root.lo) * sign(g, &root.hi) < 0
}

/// Exact sign of `f` at the root: zero is decided by the gcd with the
/// defining polynomial, otherwise the interval is bisected until an interval
/// evaluation excludes zero.
pub fn sign_at(f: &[BigInt], root: &Root) -> i8 {
    if deg(f).is_none() {
        return 0;
    }
    if root.is_exact() {
        return sign(f, &root.lo);
    }
    if divisor_vanishes(&gcd(&root.p, f), root) {
        return 0;
    }
    let mut r = root.clone();
    loop {
        let (lo, hi) = interval_eval(f, &r.lo, &r.hi);
        if lo.is_positive() {
            return 1;
        }
        if hi.is_negative() {
            return -1;
        }
        r.bisect();
        if r.is_exact() {
            return sign(f, &r.lo);
        }
    }
}

/// Number of roots of `g` in `[lo, hi]`, given that there is at most one.
fn at_most_one_root_in(g: &[BigInt], lo: &Rational, hi: &Rational) -> bool {
    if sign(g, lo) == 0 || sign(g, hi) == 0 {
        return true;
    }
    lo < hi && descartes(g, lo, hi) % 2 == 1
}

/// Exact order of two roots.
pub fn compare(a: &Root, b: &Root) -> Ordering {
    let g = gcd(&a.p, &b.p);
    if deg(&g).unwrap_or(0) > 0 {
        let lo = (&a.lo).max(&b.lo).clone();
        let hi = (&a.hi).min(&b.hi).clone();
        // g has at most one root in a's interval, so a root in the overlap is both numbers
        if lo <= hi && at_most_one_root_in(&g, &lo, &hi) {
            return Ordering::Equal;
        }
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        a.bisect();
        b.bisect();
    }
}

/// Multiplicity of a root of `square_free(f)` in `f`.
pub fn multiplicity(f: &[BigInt], root: &Root) -> usize {
    let mut m = 0;
    let mut d = f.to_vec();
    while sign_at(&d, root) == 0 {
        m += 1;
        d = derivative(&d);
    }
    m
}

/// Fraction-free Gaussian elimination.
pub fn det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            m.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Rows `f X^s` over the monomials `X^(ncols-1), ..., 1`.
fn shifted_row(f: &[BigInt], s: usize, ncols: usize) -> Vec<BigInt> {
    (0..ncols)
        .map(|c| {
            let e = ncols - 1 - c;
            if e >= s {
                f.get(e - s).cloned().unwrap_or_default()
            } else {
                BigInt::zero()
            }
        })
        .collect()
}

/// `H_j(A, B)` from the minors of the matrix with rows
/// `A X^(q-1-j), ..., A, B, ..., B X^(p-1-j)`.
pub fn minor_h(a: &[BigInt], b: &[BigInt], j: usize) -> Poly {
    let p = deg(a).unwrap();
    let q = deg(b).unwrap_or(0);
    if j == p {
        return trim(a.to_vec());
    }
    if j == p - 1 {
        return trim(b.to_vec());
    }
    if deg(b).is_none() || j > q {
        return Vec::new();
    }
    let ncols = p + q - j;
    let mut rows = Vec::new();
    for s in (0..q - j).rev() {
        rows.push(shifted_row(a, s, ncols));
    }
    for s in 0..p - j {
        rows.push(shifted_row(b, s, ncols));
    }
    let lead = p + q - 1 - 2 * j;
    trim(
        (0..=j)
            .map(|l| {
                let col = ncols - 1 - l;
                det(rows
                    .iter()
                    .map(|r| {
                        let mut v = r[..lead].to_vec();
                        v.push(r[col].clone());
                        v
                    })
                    .collect())
            })
            .collect(),
    )
}

/// Sylvester determinant with the `deg B` rows of `A` first.
pub fn sylvester(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let (m, n) = (deg(a).unwrap(), deg(b).unwrap());
    let size = m + n;
    let mut rows = Vec::new();
    for s in (0..n).rev() {
        rows.push(shifted_row(a, s, size));
    }
    for s in (0..m).rev() {
        rows.push(shifted_row(b, s, size));
    }
    det(rows)
}

/// One Graeffe step: a polynomial whose roots are the squares of the roots
/// of `p`.
pub fn graeffe(p: &[BigInt]) -> Poly {
    let even: Poly = p.iter().step_by(2).cloned().collect();
    let odd: Poly = p.iter().skip(1).step_by(2).cloned().collect();
    let mut shifted = vec![BigInt::zero()];
    shifted.extend(mul(&odd, &odd));
    sub(&mul(&even, &even), &shifted)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Bounds `(lo, hi)` with `lo^(2^m) <= M(p)^(2^m) <= hi2` where the second
/// component is the squared upper value: after `m` Graeffe steps `g`,
/// `|g_i| <= C(d, i) M(g)` and `M(g)^2 <= sum g_i^2`.
pub struct MahlerEnclosure {
    pub steps: u32,
    /// Lower bound on `M(p)^(2^steps)`.
    pub lower: Rational,
    /// Upper bound on `M(p)^(2^(steps+1))`.
    pub upper_sq: BigInt,
}

pub fn mahler_enclosure(p: &[BigInt], steps: u32) -> MahlerEnclosure {
    let d = deg(p).unwrap();
    let mut g = trim(p.to_vec());
    for _ in 0..steps {
        g = graeffe(&g);
    }
    let lower = g
        .iter()
        .enumerate()
        .map(|(i, c)| Rational::new(c.abs(), binomial(d, i)))
        .max()
        .unwrap();
    let upper_sq = g.iter().map(|c| c * c).sum();
    MahlerEnclosure { steps, lower, upper_sq }
}

/// Approximate `log2` of a positive rational.
pub fn log2(x: &Rational) -> f64 {
    fn lg(n: &BigInt) -> f64 {
        let bits = n.bits();
        let shift = bits.saturating_sub(60);
        let top: BigInt = n >> shift;
        let t: f64 = top.to_string().parse().unwrap();
        t.log2() + shift as f64
    }
    lg(x.numer()) - lg(x.denom())
}
