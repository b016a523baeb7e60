use alloc::vec::Vec;

use super::{isolate_real_roots, IsolatedRoot};
use crate::{IntPolynomial, Result, Sign};

/// Real roots `g` of `p` with `a(g) > 0` for every `a` in `gt`, `b(g) < 0`
/// for every `b` in `lt` and `c(g) = 0` for every `c` in `eq`.
pub fn satisfy_univariate(
    p: &IntPolynomial,
    gt: &[IntPolynomial],
    lt: &[IntPolynomial],
    eq: &[IntPolynomial],
) -> Result<Vec<IsolatedRoot>> {
    let roots = isolate_real_roots(p)?;
    Ok(roots
        .into_iter()
        .filter(|r| {
            let s = |q: &IntPolynomial| r.number.sign_at(q);
            eq.iter().all(|c| s(c) == Sign::Zero)
                && gt.iter().all(|a| s(a) == Sign::Positive)
                && lt.iter().all(|b| s(b) == Sign::Negative)
        })
        .collect())
}
