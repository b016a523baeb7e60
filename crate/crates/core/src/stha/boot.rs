use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::sequence::SturmHabichtSequence;
use super::SignSequence;
use crate::{ExtendedPoint, IntPolynomial, RatPolynomial, Rational, Result, Sign};

/// One group of proportional nonzero entries: the entry at `first` and, in a
/// defective sequence, a copy `ratio * H_first` at index `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub first: usize,
    pub degree: usize,
    pub ratio: Rational,
}

/// Compressed form of a Sturm-Habicht sequence.
///
/// With `F_0, ..., F_M` the first entries of the blocks, `quotients[m - 1]`
/// is `quo(F_(m-1), F_m)` over `Q` and `F_(m+1) = -multipliers[m - 1] *
/// rem(F_(m-1), F_m)`. The multipliers carry signs; they are not normalized
/// to be positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientBoot {
    top: usize,
    quotients: Vec<RatPolynomial>,
    multipliers: Vec<Rational>,
    last: IntPolynomial,
    blocks: Vec<Block>,
}

impl QuotientBoot {
    pub fn from_sequence(seq: &SturmHabichtSequence) -> QuotientBoot {
        let polys = seq.polys();
        let top = seq.top();
        let mut blocks: Vec<Block> = Vec::new();
        let mut firsts: Vec<&IntPolynomial> = Vec::new();
        for j in (0..=top).rev() {
            let h = &polys[j];
            let Some(d) = h.degree() else { continue };
            match blocks.last_mut() {
                Some(b) if b.degree == d && b.first != j => {
                    b.ratio = Rational::new(
                        h.leading_coeff().unwrap().clone(),
                        polys[b.first].leading_coeff().unwrap().clone(),
                    );
                }
                _ => {
                    blocks.push(Block {
                        first: j,
                        degree: d,
                        ratio: Rational::zero(),
                    });
                    firsts.push(h);
                }
            }
        }
        for b in &mut blocks {
            if b.first == b.degree {
                b.ratio = Rational::from_integer(1.into());
            }
        }

        let mut quotients = Vec::new();
        let mut multipliers = Vec::new();
        for m in 1..firsts.len() {
            let (q, r) = firsts[m - 1].div_rem_rational(firsts[m]);
            quotients.push(q);
            if m + 1 < firsts.len() {
                let next = firsts[m + 1].to_rational();
                let c = next.leading_coeff().unwrap() / -r.leading_coeff().unwrap();
                multipliers.push(c);
            }
        }
        QuotientBoot {
            top,
            quotients,
            multipliers,
            last: firsts.last().map(|p| (*p).clone()).unwrap_or_default(),
            blocks,
        }
    }

    pub fn quotients(&self) -> &[RatPolynomial] {
        &self.quotients
    }

    pub fn multipliers(&self) -> &[Rational] {
        &self.multipliers
    }

    /// The last nonzero remainder.
    pub fn last(&self) -> &IntPolynomial {
        &self.last
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Values of the block heads `F_0..F_M` at a finite point, by back
    /// substitution from the last element.
    fn head_values(&self, x: &Rational) -> Vec<Rational> {
        let n = self.blocks.len();
        let mut v = vec![Rational::zero(); n];
        v[n - 1] = self.last.eval_rational(x);
        for m in (1..n).rev() {
            let mut val = self.quotients[m - 1].eval(x) * &v[m];
            if m + 1 < n {
                val -= &v[m + 1] / &self.multipliers[m - 1];
            }
            v[m - 1] = val;
        }
        v
    }

    fn head_signs_at_infinity(&self, negative: bool) -> Vec<Sign> {
        let n = self.blocks.len();
        let mut s = vec![Sign::Zero; n];
        s[n - 1] = self.last.leading_sign();
        for m in (1..n).rev() {
            let lq = Sign::of_rational(self.quotients[m - 1].leading_coeff().unwrap());
            s[m - 1] = lq * s[m];
        }
        if negative {
            for (sign, b) in s.iter_mut().zip(&self.blocks) {
                if b.degree % 2 == 1 {
                    *sign = -*sign;
                }
            }
        }
        s
    }

    /// Signs of `H_p, ..., H_0` at `x`.
    pub fn signs_at(&self, x: &ExtendedPoint) -> SignSequence {
        let heads: Vec<Sign> = match x {
            ExtendedPoint::Finite(x) => self.head_values(x).iter().map(Sign::of_rational).collect(),
            ExtendedPoint::PosInfinity => self.head_signs_at_infinity(false),
            ExtendedPoint::NegInfinity => self.head_signs_at_infinity(true),
        };
        let mut out = vec![Sign::Zero; self.top + 1];
        for (b, s) in self.blocks.iter().zip(heads) {
            out[self.top - b.first] = s;
            out[self.top - b.degree] = s * Sign::of_rational(&b.ratio);
        }
        SignSequence::new(out)
    }
}

/// Quotient boot of `StHa(A, B)`.
pub fn stha_quotient_boot(a: &IntPolynomial, b: &IntPolynomial) -> Result<QuotientBoot> {
    Ok(QuotientBoot::from_sequence(&super::stha_sequence(a, b)?))
}

/// Signs of every Sturm-Habicht element at `x`, from the boot.
pub fn eval_stha_at(boot: &QuotientBoot, x: &ExtendedPoint) -> SignSequence {
    boot.signs_at(x)
}
