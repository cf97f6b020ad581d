use serde::Serialize;

use super::Permutation;
use crate::error::{Error, Result};

/// A run of consecutive positions whose values form a contiguous range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IntervalSpan {
    /// 0-based start position.
    pub start: usize,
    pub len: usize,
}

impl IntervalSpan {
    pub fn end(&self) -> usize {
        self.start + self.len
    }
}

/// For each start position, the lengths `len` (in increasing order) such
/// that `start..start + len` is an interval, restricted to `2..n`.
fn interval_lengths_by_start(p: &Permutation) -> Vec<Vec<usize>> {
    let n = p.len();
    let v = p.values();
    (0..n)
        .map(|start| {
            let (mut lo, mut hi) = (usize::MAX, 0);
            let mut lens = Vec::new();
            for end in start..n {
                lo = lo.min(v[end]);
                hi = hi.max(v[end]);
                let len = end - start + 1;
                if len > 1 && len < n && hi - lo + 1 == len {
                    lens.push(len);
                }
            }
            lens
        })
        .collect()
}

/// All intervals of length strictly between 1 and `n`, ordered by start then length.
pub fn proper_intervals(p: &Permutation) -> Vec<IntervalSpan> {
    interval_lengths_by_start(p)
        .into_iter()
        .enumerate()
        .flat_map(|(start, lens)| lens.into_iter().map(move |len| IntervalSpan { start, len }))
        .collect()
}

/// 1, 12 and 21 (and the empty permutation) count as simple.
pub fn is_simple(p: &Permutation) -> bool {
    let n = p.len();
    let v = p.values();
    for start in 0..n {
        let (mut lo, mut hi) = (usize::MAX, 0);
        for end in start..n {
            lo = lo.min(v[end]);
            hi = hi.max(v[end]);
            let len = end - start + 1;
            if len > 1 && len < n && hi - lo + 1 == len {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SumSkewStatus {
    SumDecomposable,
    SkewDecomposable,
    IndecomposableBoth,
}

/// Length of the shortest proper prefix whose values are `1..=k`, if any.
pub(crate) fn first_sum_block(v: &[usize]) -> Option<usize> {
    let mut hi = 0;
    for (i, &x) in v.iter().enumerate().take(v.len().saturating_sub(1)) {
        hi = hi.max(x);
        if hi == i + 1 {
            return Some(i + 1);
        }
    }
    None
}

/// Length of the shortest proper prefix whose values are the top `k`.
pub(crate) fn first_skew_block(v: &[usize]) -> Option<usize> {
    let n = v.len();
    let mut lo = usize::MAX;
    for (i, &x) in v.iter().enumerate().take(n.saturating_sub(1)) {
        lo = lo.min(x);
        if lo == n - i {
            return Some(i + 1);
        }
    }
    None
}

pub fn sum_skew_status(p: &Permutation) -> Result<SumSkewStatus> {
    if p.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    Ok(if first_sum_block(p.values()).is_some() {
        SumSkewStatus::SumDecomposable
    } else if first_skew_block(p.values()).is_some() {
        SumSkewStatus::SkewDecomposable
    } else {
        SumSkewStatus::IndecomposableBoth
    })
}

pub fn is_sum_indecomposable(p: &Permutation) -> bool {
    !p.is_empty() && first_sum_block(p.values()).is_none()
}

/// Longest proper interval starting at each position (1 when none).
pub(crate) fn longest_interval_from(p: &Permutation) -> Vec<usize> {
    interval_lengths_by_start(p)
        .into_iter()
        .map(|lens| lens.last().copied().unwrap_or(1))
        .collect()
}
