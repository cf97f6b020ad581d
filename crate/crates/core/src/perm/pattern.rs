//! Pattern containment by backtracking over host positions.
//!
//! Pattern entries are placed left to right. Each new entry is confined to
//! the value window bounded by the already placed entries that are its
//! nearest neighbours in value, so every partial assignment is order
//! isomorphic to the corresponding pattern prefix. Positions are tried in
//! increasing order, which makes the first occurrence found the
//! lexicographically least one.

use serde::Serialize;

use super::Permutation;

/// Positions (0-based, strictly increasing) of a copy of a pattern in a host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Occurrence {
    pub positions: Vec<usize>,
}

impl Occurrence {
    pub fn one_based(&self) -> Vec<usize> {
        self.positions.iter().map(|p| p + 1).collect()
    }

    pub fn values(&self, host: &Permutation) -> Vec<usize> {
        self.positions.iter().map(|&p| host.at(p)).collect()
    }

    /// Checks the occurrence invariant against a host and pattern.
    pub fn is_copy_of(&self, host: &Permutation, pattern: &Permutation) -> bool {
        self.positions.len() == pattern.len()
            && self.positions.windows(2).all(|w| w[0] < w[1])
            && self.positions.last().is_none_or(|&p| p < host.len())
            && Permutation::standardize(&self.values(host)) == *pattern
    }
}

/// Per pattern index: the earlier indices holding the nearest smaller and
/// nearest larger value.
struct Plan {
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl Plan {
    fn new(pattern: &[usize]) -> Self {
        let k = pattern.len();
        let mut below = vec![None; k];
        let mut above = vec![None; k];
        for i in 0..k {
            for j in 0..i {
                if pattern[j] < pattern[i] {
                    if below[i].is_none_or(|b: usize| pattern[b] < pattern[j]) {
                        below[i] = Some(j);
                    }
                } else if above[i].is_none_or(|a: usize| pattern[a] > pattern[j]) {
                    above[i] = Some(j);
                }
            }
        }
        Plan { below, above }
    }
}

struct Search<'a> {
    host: &'a [usize],
    pattern: &'a [usize],
    plan: Plan,
    /// `(pattern index, host index)` that must be used.
    anchor: Option<(usize, usize)>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn fits(&self, k: usize, pos: usize) -> bool {
        let v = self.host[pos];
        if let Some(b) = self.plan.below[k] {
            if v < self.host[self.chosen[b]] {
                return false;
            }
        }
        if let Some(a) = self.plan.above[k] {
            if v > self.host[self.chosen[a]] {
                return false;
            }
        }
        if let Some((pi, hi)) = self.anchor {
            if k != pi {
                let anchor_value = self.host[hi];
                if (self.pattern[k] < self.pattern[pi]) != (v < anchor_value) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, k: usize, start: usize) -> bool {
        let m = self.pattern.len();
        if k == m {
            return true;
        }
        let n = self.host.len();
        let (lo, hi) = match self.anchor {
            Some((pi, h)) if k == pi => {
                if h < start {
                    return false;
                }
                (h, h + 1)
            }
            Some((pi, h)) if k < pi => (start, h.min(n)),
            _ => (start, n + 1 + k - m),
        };
        let hi = hi.min(n + 1 + k - m);
        for pos in lo..hi {
            if self.fits(k, pos) {
                self.chosen.push(pos);
                if self.run(k + 1, pos + 1) {
                    return true;
                }
                self.chosen.pop();
            }
        }
        false
    }
}

fn search(host: &[usize], pattern: &[usize], anchor: Option<(usize, usize)>) -> Option<Occurrence> {
    if pattern.len() > host.len() {
        return None;
    }
    let mut s = Search {
        host,
        pattern,
        plan: Plan::new(pattern),
        anchor,
        chosen: Vec::with_capacity(pattern.len()),
    };
    s.run(0, 0).then_some(Occurrence { positions: s.chosen })
}

/// Lexicographically least occurrence of `pattern` in `host`, if any.
pub fn contains(host: &Permutation, pattern: &Permutation) -> Option<Occurrence> {
    search(host.values(), pattern.values(), None)
}

/// Slice form of [`contains`]; both sequences need only hold distinct values.
pub fn find_in_sequence(host: &[usize], pattern: &[usize]) -> Option<Occurrence> {
    search(host, pattern, None)
}

/// Occurrence in which pattern index `pattern_index` is matched to host
/// position `host_index`.
pub fn contains_anchored(
    host: &[usize],
    pattern: &[usize],
    pattern_index: usize,
    host_index: usize,
) -> Option<Occurrence> {
    search(host, pattern, Some((pattern_index, host_index)))
}

pub fn avoids(host: &Permutation, pattern: &Permutation) -> bool {
    contains(host, pattern).is_none()
}

pub fn avoids_all(host: &Permutation, basis: &[Permutation]) -> bool {
    basis.iter().all(|b| avoids(host, b))
}

/// First basis element contained in `host` together with its occurrence.
pub fn first_violation<'b>(
    host: &Permutation,
    basis: &'b [Permutation],
) -> Option<(&'b Permutation, Occurrence)> {
    basis.iter().find_map(|b| contains(host, b).map(|occ| (b, occ)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;
    use itertools::Itertools;

    /// Every increasing index tuple, checked by standardization.
    fn brute_force(host: &Permutation, pattern: &Permutation) -> Option<Vec<usize>> {
        (0..host.len()).combinations(pattern.len()).find(|idx| {
            let sub: Vec<usize> = idx.iter().map(|&i| host.at(i)).collect();
            Permutation::standardize(&sub) == *pattern
        })
    }

    #[test]
    fn occurrence_of_51342() {
        let host = perm!("391867452");
        let pattern = perm!("51342");
        let quoted = Occurrence { positions: vec![1, 2, 4, 5, 8] };
        assert!(quoted.is_copy_of(&host, &pattern));
        assert_eq!(quoted.values(&host), vec![9, 1, 6, 7, 2]);
        // 91674 is also a copy and comes first lexicographically
        let occ = contains(&host, &pattern).unwrap();
        assert_eq!(occ.one_based(), vec![2, 3, 5, 6, 7]);
        assert!(occ.is_copy_of(&host, &pattern));
        assert!(!Occurrence { positions: vec![0, 1, 2, 3, 4] }.is_copy_of(&host, &pattern));
    }

    #[test]
    fn trivial_cases() {
        for p in Permutation::all(4) {
            assert!(contains(&p, &perm!("1")).is_some());
            assert!(contains(&p, &Permutation::empty()).is_some());
        }
        assert!(contains(&perm!("4123"), &perm!("2341")).is_none());
        assert!(contains(&perm!("12"), &perm!("123")).is_none());
    }

    #[test]
    fn agrees_with_brute_force_and_is_lex_least() {
        let patterns: Vec<Permutation> = (1..=4).flat_map(Permutation::all).collect();
        for host in (0..=7).flat_map(Permutation::all).step_by(7) {
            for pattern in &patterns {
                let fast = contains(&host, pattern).map(|o| o.positions);
                assert_eq!(fast, brute_force(&host, pattern), "{host} / {pattern}");
            }
        }
    }

    #[test]
    fn anchored_search() {
        // the 5 of 25341 has only one entry before it
        let host = perm!("25341");
        assert!(contains_anchored(host.values(), &[2, 3, 4, 1], 2, 1).is_none());
        let occ = contains_anchored(host.values(), &[2, 3, 4, 1], 2, 3).unwrap();
        assert_eq!(occ.positions, vec![0, 2, 3, 4]);
        // anchored agrees with filtering all occurrences
        for host in Permutation::all(6) {
            for pat in [perm!("2341"), perm!("4123"), perm!("3412")] {
                let top = pat.values().iter().position(|&v| v == 4).unwrap();
                let pos_n = host.values().iter().position(|&v| v == 6).unwrap();
                let brute = (0..6).combinations(4).any(|idx| {
                    idx[top] == pos_n && {
                        let sub: Vec<usize> = idx.iter().map(|&i| host.at(i)).collect();
                        Permutation::standardize(&sub) == pat
                    }
                });
                assert_eq!(contains_anchored(host.values(), pat.values(), top, pos_n).is_some(), brute);
            }
        }
    }
}
