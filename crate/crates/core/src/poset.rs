//! The dimension-2 poset of a permutation and `(a+b)`-free tests.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A strict partial order on `1..=n`, stored as a dense relation matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    // less[(i - 1) * size + (j - 1)] is true iff i < j in the order
    less: Vec<bool>,
}

impl Poset {
    /// Builds a poset from a relation, checking irreflexivity, antisymmetry
    /// and transitivity.
    pub fn new(size: usize, less: Vec<bool>) -> Result<Self> {
        if less.len() != size * size {
            return Err(Error::Precondition(format!(
                "relation has {} entries, expected {}",
                less.len(),
                size * size
            )));
        }
        let p = Poset { size, less };
        for a in 1..=size {
            if p.lt(a, a) {
                return Err(Error::Precondition(format!("{a} < {a}")));
            }
            for b in 1..=size {
                if p.lt(a, b) && p.lt(b, a) {
                    return Err(Error::Precondition(format!("{a} and {b} are mutually below")));
                }
                if !p.lt(a, b) {
                    continue;
                }
                for c in 1..=size {
                    if p.lt(b, c) && !p.lt(a, c) {
                        return Err(Error::Precondition(format!("{a} < {b} < {c} but not {a} < {c}")));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `a < b` for elements in `1..=size`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.less[(a - 1) * self.size + (b - 1)]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) || self.lt(b, a)
    }

    /// All related pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (1..=self.size)
            .cartesian_product(1..=self.size)
            .filter(|&(a, b)| self.lt(a, b))
            .collect()
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset").field("size", &self.size).field("relations", &self.relations()).finish()
    }
}

/// `i < j` iff `i < j` as integers and `i` appears left of `j` in `p`.
pub fn poset_from_perm(p: &Permutation) -> Poset {
    let n = p.len();
    let pos = p.positions();
    let mut less = vec![false; n * n];
    for i in 1..=n {
        for j in i + 1..=n {
            if pos[i - 1] < pos[j - 1] {
                less[(i - 1) * n + (j - 1)] = true;
            }
        }
    }
    Poset::new(n, less).expect("permutation posets are partial orders")
}

/// Whether some `a + b` elements induce a disjoint union of an `a`-chain and
/// a `b`-chain. Brute force over element subsets.
pub fn contains_a_plus_b(poset: &Poset, a: usize, b: usize) -> bool {
    assert!(a >= 1 && b >= 1, "chain lengths must be positive");
    let k = a + b;
    if k > poset.size() {
        return false;
    }
    (1..=poset.size()).combinations(k).any(|subset| induces_two_chains(poset, &subset, a, b))
}

/// The comparability graph on `subset` must be exactly two cliques of sizes
/// `a` and `b` with no edges between them. Cliques of comparability are chains.
fn induces_two_chains(poset: &Poset, subset: &[usize], a: usize, b: usize) -> bool {
    let first = subset[0];
    let (with_first, rest): (Vec<usize>, Vec<usize>) =
        subset.iter().partition(|&&x| x == first || poset.comparable(first, x));
    let sizes_ok = (with_first.len() == a && rest.len() == b) || (with_first.len() == b && rest.len() == a);
    if !sizes_ok {
        return false;
    }
    let clique = |s: &[usize]| s.iter().tuple_combinations().all(|(&x, &y)| poset.comparable(x, y));
    let separated = with_first.iter().all(|&x| rest.iter().all(|&y| !poset.comparable(x, y)));
    clique(&with_first) && clique(&rest) && separated
}

pub fn is_three_plus_one_free(poset: &Poset) -> bool {
    !contains_a_plus_b(poset, 3, 1)
}
