//! Permutations, pattern containment, intervals and substitution decomposition.

mod decompose;
mod interval;
mod pattern;
mod permutation;

pub use decompose::{inflate, substitution_decompose, Decomposition};
pub use interval::{
    is_simple, is_sum_indecomposable, proper_intervals, sum_skew_status, IntervalSpan,
    SumSkewStatus,
};
pub use pattern::{
    avoids, avoids_all, contains, contains_anchored, find_in_sequence, first_violation, Occurrence,
};
pub use permutation::{parse_permutation, AllPermutations, Permutation, Symmetry};

/// Parses a comma-separated basis list such as `"2341,4123"`.
pub fn parse_basis(text: &str) -> crate::Result<Vec<Permutation>> {
    text.split(',').map(parse_permutation).collect()
}
