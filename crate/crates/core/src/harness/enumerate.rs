//! Generation of class members by inserting a new maximum into every gap.
//! Removing the maximum of a member leaves a member, so every member is
//! reached and only children need checking, and only for occurrences that
//! use the new maximum.

use rayon::prelude::*;

use super::table::{CountSource, CountTable};
use crate::error::{Error, Result};
use crate::perm::{contains_anchored, is_simple, Permutation};

/// Nodes of this length are the independent units of parallel work.
pub const SPLIT_LENGTH: usize = 6;

struct Generator<'a> {
    basis: &'a [Permutation],
    /// Index of each pattern's maximum, the only entry the new maximum can play.
    anchors: Vec<usize>,
    n_max: usize,
}

impl<'a> Generator<'a> {
    fn new(basis: &'a [Permutation], n_max: usize) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::Precondition("basis must be non-empty".into()));
        }
        let anchors = basis
            .iter()
            .map(|b| b.positions().last().copied().unwrap_or(0))
            .collect();
        Ok(Generator { basis, anchors, n_max })
    }

    fn root_admitted(&self) -> bool {
        self.basis.iter().all(|b| !b.is_empty())
    }

    fn admits(&self, child: &[usize], gap: usize) -> bool {
        self.basis.iter().zip(&self.anchors).all(|(b, &anchor)| {
            b.len() > child.len() || contains_anchored(child, b.values(), anchor, gap).is_none()
        })
    }

    fn children(&self, node: &[usize]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut buf = node.to_vec();
        for gap in 0..=node.len() {
            buf.insert(gap, node.len() + 1);
            if self.admits(&buf, gap) {
                out.push(buf.clone());
            }
            buf.remove(gap);
        }
        out
    }

    fn walk<T>(&self, node: &mut Vec<usize>, acc: &mut T, visit: &(impl Fn(&mut T, &[usize]) + Sync)) {
        visit(acc, node);
        if node.len() >= self.n_max {
            return;
        }
        let len = node.len();
        for gap in 0..=len {
            node.insert(gap, len + 1);
            if self.admits(node, gap) {
                self.walk(node, acc, visit);
            }
            node.remove(gap);
        }
    }

    fn fold<T: Send>(
        &self,
        jobs: Option<usize>,
        init: impl Fn() -> T + Sync + Send,
        visit: impl Fn(&mut T, &[usize]) + Sync,
        merge: impl Fn(T, T) -> T + Sync + Send,
    ) -> Result<T> {
        let mut acc = init();
        if !self.root_admitted() {
            return Ok(acc);
        }
        // visit the shallow part sequentially, collecting the split frontier
        let split = SPLIT_LENGTH.min(self.n_max);
        let mut level = vec![Vec::new()];
        for _ in 0..split {
            for node in &level {
                visit(&mut acc, node);
            }
            level = level.iter().flat_map(|node| self.children(node)).collect();
        }
        let run = || {
            level
                .par_iter()
                .map(|node| {
                    let mut local = init();
                    self.walk(&mut node.clone(), &mut local, &visit);
                    local
                })
                .reduce(&init, &merge)
        };
        let deep = match jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
                .install(run),
            None => run(),
        };
        Ok(merge(acc, deep))
    }

    fn count(&self, jobs: Option<usize>, keep: impl Fn(&[usize]) -> bool + Sync) -> Result<Vec<u64>> {
        let n = self.n_max;
        self.fold(
            jobs,
            || vec![0u64; n + 1],
            |acc, node| {
                if keep(node) {
                    acc[node.len()] += 1;
                }
            },
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
    }
}

fn table(source: CountSource, basis: &[Permutation], counts: Vec<u64>) -> CountTable {
    CountTable::new(source, basis.to_vec(), counts.into_iter().enumerate().map(|(n, c)| (n, c.into())).collect())
}

pub fn enumerate_class(basis: &[Permutation], n_max: usize) -> Result<CountTable> {
    enumerate_class_with(basis, n_max, None)
}

/// `jobs` fixes the worker count; `None` uses the global pool.
pub fn enumerate_class_with(basis: &[Permutation], n_max: usize, jobs: Option<usize>) -> Result<CountTable> {
    let counts = Generator::new(basis, n_max)?.count(jobs, |_| true)?;
    Ok(table(CountSource::Enumeration, basis, counts))
}

/// Members that are simple; lengths 0 to 2 count as simple.
pub fn enumerate_simples(basis: &[Permutation], n_max: usize) -> Result<CountTable> {
    enumerate_simples_with(basis, n_max, None)
}

pub fn enumerate_simples_with(basis: &[Permutation], n_max: usize, jobs: Option<usize>) -> Result<CountTable> {
    let counts = Generator::new(basis, n_max)?
        .count(jobs, |node| is_simple(&Permutation::from_vec_unchecked(node.to_vec())))?;
    Ok(table(CountSource::Enumeration, basis, counts))
}

/// Every member of length exactly `n`, in lexicographic order.
pub fn enumerate_members(basis: &[Permutation], n: usize) -> Result<Vec<Permutation>> {
    let mut members = Generator::new(basis, n)?.fold(
        None,
        Vec::new,
        |acc: &mut Vec<Permutation>, node| {
            if node.len() == n {
                acc.push(Permutation::from_vec_unchecked(node.to_vec()));
            }
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    members.sort_unstable();
    Ok(members)
}
