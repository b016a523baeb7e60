//! Sturm-Habicht sequences and what they compute: Tarski queries and real
//! root counts, resultants, gcds and square-free factorizations.

mod boot;
mod count;
mod gcd;
mod sequence;

pub use boot::{eval_stha_at, stha_quotient_boot, Block, QuotientBoot};
pub use count::{count_real_roots, modified_sign_variations, tarski_query, SignSequence, SturmCounter};
pub use gcd::{gcd, resultant, square_free_factorization, square_free_part, SquareFreeDecomposition};
pub use sequence::{stha_sequence, SturmHabichtSequence};

pub(crate) use gcd::resultant_generic;
pub(crate) use sequence::sequence as generic_sequence;
