use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
///
/// Positions are 0-based when used as indices into [`Permutation::values`];
/// the values themselves are 1-based. The empty permutation is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    values: Vec<usize>,
}

/// One of the three generators of the eight symmetries of the containment order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
    Inverse,
}

impl Symmetry {
    pub const ALL: [Symmetry; 3] = [Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse];
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::ValueOutOfRange { value: v, len: n });
            }
            if seen[v] {
                return Err(Error::DuplicateValue(v));
            }
            seen[v] = true;
        }
        Ok(Self { values })
    }

    /// Caller guarantees `values` is a bijection on `1..=len`.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Self { values }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn identity(n: usize) -> Self {
        Self::from_vec_unchecked((1..=n).collect())
    }

    /// `n (n-1) ... 1`
    pub fn decreasing(n: usize) -> Self {
        Self::from_vec_unchecked((1..=n).rev().collect())
    }

    /// Rank-reduces any sequence of distinct integers to the permutation
    /// order-isomorphic to it.
    pub fn standardize(seq: &[usize]) -> Self {
        let mut order: Vec<usize> = (0..seq.len()).collect();
        order.sort_unstable_by_key(|&i| seq[i]);
        let mut values = vec![0; seq.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank + 1;
        }
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    /// Value at 0-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn reverse(&self) -> Self {
        Self { values: self.values.iter().rev().copied().collect() }
    }

    pub fn complement(&self) -> Self {
        let n = self.len();
        Self { values: self.values.iter().map(|&v| n + 1 - v).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v - 1] = i + 1;
        }
        Self { values }
    }

    pub fn symmetry(&self, which: Symmetry) -> Self {
        match which {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::Inverse => self.inverse(),
        }
    }

    /// 0-based position of each value: `positions()[v - 1]`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            pos[v - 1] = i;
        }
        pos
    }

    /// True when every entry is smaller than the one before it.
    pub fn is_decreasing(&self) -> bool {
        is_decreasing(&self.values)
    }

    /// Removes the entry at 0-based position `i` and standardizes.
    pub fn delete_at(&self, i: usize) -> Self {
        let removed = self.values[i];
        let values = self
            .values
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Self { values }
    }

    /// All `n!` permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some((1..=n).collect()) }
    }
}

pub(crate) fn is_decreasing(seq: &[usize]) -> bool {
    seq.windows(2).all(|w| w[0] > w[1])
}

/// Lexicographic iterator over every permutation of a fixed length.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let n = succ.len();
        if n > 1 {
            let mut i = n - 1;
            while i > 0 && succ[i - 1] > succ[i] {
                i -= 1;
            }
            if i > 0 {
                let mut j = n - 1;
                while succ[j] < succ[i - 1] {
                    j -= 1;
                }
                succ.swap(i - 1, j);
                succ[i..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation { values: current })
    }
}

/// Parses either a digit string (`"2341"`, lengths up to 9) or a comma and/or
/// whitespace separated list (`"10,1,2"`). The empty string is the empty
/// permutation.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Permutation::empty());
    }
    let is_list = text.contains(|c: char| c == ',' || c.is_whitespace());
    let values = if is_list {
        let tokens: Vec<&str> = if text.contains(',') {
            text.split(',').map(str::trim).collect()
        } else {
            text.split_whitespace().collect()
        };
        tokens
            .into_iter()
            .map(|tok| {
                if tok.is_empty() {
                    return Err(Error::EmptyToken);
                }
                tok.parse::<usize>().map_err(|_| Error::InvalidToken(tok.to_string()))
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        if text.chars().count() > 9 {
            return Err(Error::DigitFormTooLong(text.chars().count()));
        }
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::InvalidToken(c.to_string()))
            })
            .collect::<Result<Vec<_>>>()?
    };
    Permutation::new(values)
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s)
    }
}

/// Digit form for `n <= 9`, comma-separated list otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_permutation(&text).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for tests and literal data: panics on malformed input.
#[macro_export]
macro_rules! perm {
    ($text:expr) => {
        $crate::perm::parse_permutation($text).expect("valid permutation literal")
    };
}
