use alloc::vec;
use alloc::vec::Vec;

use crate::ring;
use crate::{Error, IntPolynomial, Result};
use num_bigint::BigInt;

/// The Sturm-Habicht sequence `H_p, ..., H_0` of a pair `(A, B)` with
/// `deg A = p > deg B`.
///
/// Entries are stored by index, `polys()[j] == H_j`, and identically zero
/// entries of a defective sequence are kept so that indices line up with the
/// determinant definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmHabichtSequence {
    polys: Vec<IntPolynomial>,
    principal: Vec<BigInt>,
}

impl SturmHabichtSequence {
    /// `H_j` for `j = 0..=p`.
    pub fn polys(&self) -> &[IntPolynomial] {
        &self.polys
    }

    /// Principal coefficients `h_j`, with `h_p = 1`.
    pub fn principal(&self) -> &[BigInt] {
        &self.principal
    }

    pub fn get(&self, j: usize) -> &IntPolynomial {
        &self.polys[j]
    }

    /// `p = deg A`.
    pub fn top(&self) -> usize {
        self.polys.len() - 1
    }

    /// The lowest-index nonzero element; up to a constant this is `gcd(A, B)`.
    pub fn last_nonzero(&self) -> &IntPolynomial {
        self.polys.iter().find(|h| !h.is_zero()).expect("H_p = A is nonzero")
    }

    /// Signs of every element at a rational point, computed directly.
    pub fn signs_at(&self, x: &crate::ExtendedPoint) -> super::SignSequence {
        super::SignSequence::new(self.polys.iter().rev().map(|h| h.sign_at(x)).collect())
    }
}

/// Signed subresultant recurrence with exact divisions, over any of the
/// coefficient rings used in the crate. Returns `H_j` by index and the
/// principal coefficients `h_j` (with `h_p = 1`).
///
/// The caller guarantees `deg a > deg b` (or `b == 0`).
pub(crate) fn sequence<R: ring::Ring>(a: &[R], b: &[R]) -> (Vec<Vec<R>>, Vec<R>) {
    let p = ring::degree(a).expect("A must be nonzero");
    debug_assert!(ring::degree(b).is_none_or(|q| q < p));

    let mut polys: Vec<Vec<R>> = vec![Vec::new(); p + 1];
    let mut s: Vec<R> = vec![R::zero(); p + 1];
    let mut t: Vec<R> = vec![R::zero(); p + 1];
    polys[p] = a.to_vec();
    s[p] = R::one();
    t[p] = R::one();

    if p > 0 && !b.is_empty() {
        polys[p - 1] = b.to_vec();
        t[p - 1] = ring::lc(b);
        let (mut i, mut j) = (p + 1, p);
        loop {
            let k = ring::degree(&polys[j - 1]).expect("nonzero by loop invariant");
            let c = if k == j - 1 {
                s[j - 1] = t[j - 1].clone();
                s[j - 1].mul(&s[j - 1])
            } else {
                s[j - 1] = R::zero();
                for delta in 1..j - k {
                    let mut v = t[j - 1].mul(&t[j - delta]);
                    if delta % 2 == 1 {
                        v = v.neg();
                    }
                    t[j - delta - 1] = v.div_exact(&s[j]).expect("inexact division in gap");
                }
                s[k] = t[k].clone();
                polys[k] = ring::div_exact_scalar(&ring::scale(&polys[j - 1], &s[k]), &t[j - 1])
                    .expect("inexact division in gap copy");
                t[j - 1].mul(&s[k])
            };
            if k == 0 {
                break;
            }
            let u = &polys[i - 1];
            let v = &polys[j - 1];
            let e = ring::degree(u).unwrap() + 1 - k;
            let num = ring::neg(&ring::scale(&ring::prem(u, v), &c));
            let den = ring::lc(v).pow(e).mul(&s[j]).mul(&t[i - 1]);
            let mut next = ring::div_exact_scalar(&num, &den).expect("inexact division in remainder");
            ring::trim(&mut next);
            if next.is_empty() {
                break;
            }
            t[k - 1] = ring::lc(&next);
            polys[k - 1] = next;
            i = j;
            j = k;
        }
    }

    let principal = (0..=p)
        .map(|j| if j == p { R::one() } else { ring::coeff(&polys[j], j) })
        .collect();
    (polys, principal)
}

/// Sturm-Habicht sequence of `A` and `B`, `deg A > deg B`.
pub fn stha_sequence(a: &IntPolynomial, b: &IntPolynomial) -> Result<SturmHabichtSequence> {
    let p = a.degree().ok_or(Error::Precondition("A must be nonzero"))?;
    if b.degree().is_some_and(|q| q >= p) {
        return Err(Error::Precondition("deg A must exceed deg B"));
    }
    let (polys, principal) = sequence(a.coeffs(), b.coeffs());
    Ok(SturmHabichtSequence {
        polys: polys.into_iter().map(IntPolynomial::new).collect(),
        principal,
    })
}
