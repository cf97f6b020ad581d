//! Block templates: a grid of columns (position bands) and rows (value bands)
//! in which the listed cells hold decreasing sequences and every other cell
//! is empty. Matching tries every placement of the split lines.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{avoids_all, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTemplate {
    pub columns: usize,
    pub rows: usize,
    /// `(column, row)` cells allowed to be non-empty, counted from bottom left.
    pub cells: Vec<(usize, usize)>,
}

impl BlockTemplate {
    pub fn new(columns: usize, rows: usize, cells: &[(usize, usize)]) -> Self {
        assert!(columns >= 1 && rows >= 1);
        assert!(cells.iter().all(|&(c, r)| c < columns && r < rows));
        BlockTemplate { columns, rows, cells: cells.to_vec() }
    }

    /// Mirror in the main diagonal; `p` matches `t` iff `p.inverse()` matches `t.transpose()`.
    pub fn transpose(&self) -> Self {
        let cells: Vec<_> = self.cells.iter().map(|&(c, r)| (r, c)).collect();
        BlockTemplate::new(self.rows, self.columns, &cells)
    }

    pub fn matches(&self, p: &Permutation) -> bool {
        let n = p.len();
        let mut allowed = vec![false; self.columns * self.rows];
        for &(c, r) in &self.cells {
            allowed[c * self.rows + r] = true;
        }
        let mut col_cuts = vec![0; self.columns - 1];
        loop {
            let column_of: Vec<usize> = (1..=n).map(|x| col_cuts.iter().filter(|&&c| c < x).count()).collect();
            if self.fits_some_rows(p, &column_of, &allowed) {
                return true;
            }
            if !next_cuts(&mut col_cuts, n) {
                return false;
            }
        }
    }

    fn fits_some_rows(&self, p: &Permutation, column_of: &[usize], allowed: &[bool]) -> bool {
        let n = p.len();
        let mut row_cuts = vec![0; self.rows - 1];
        loop {
            if self.fits(p, column_of, &row_cuts, allowed) {
                return true;
            }
            if !next_cuts(&mut row_cuts, n) {
                return false;
            }
        }
    }

    fn fits(&self, p: &Permutation, column_of: &[usize], row_cuts: &[usize], allowed: &[bool]) -> bool {
        // last value seen in each cell, scanning left to right
        let mut last = vec![usize::MAX; self.columns * self.rows];
        for (i, &y) in p.values().iter().enumerate() {
            let row = row_cuts.iter().filter(|&&c| c < y).count();
            let cell = column_of[i] * self.rows + row;
            if !allowed[cell] || last[cell] < y {
                return false;
            }
            last[cell] = y;
        }
        true
    }
}

/// Advances a non-decreasing cut vector over `0..=n`; false once exhausted.
fn next_cuts(cuts: &mut [usize], n: usize) -> bool {
    for i in (0..cuts.len()).rev() {
        if cuts[i] < n {
            cuts[i] += 1;
            let v = cuts[i];
            for c in &mut cuts[i + 1..] {
                *c = v;
            }
            return true;
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Juxtaposition {
    /// A vertical line splits the plot into two decreasing halves.
    Horizontal,
    /// A horizontal line splits the plot into two decreasing halves.
    Vertical,
}

pub fn horizontal_pair() -> BlockTemplate {
    BlockTemplate::new(2, 1, &[(0, 0), (1, 0)])
}

pub fn vertical_pair() -> BlockTemplate {
    BlockTemplate::new(1, 2, &[(0, 0), (0, 1)])
}

/// Horizontal wins when both splits exist.
pub fn decreasing_juxtaposition(p: &Permutation) -> Option<Juxtaposition> {
    if horizontal_pair().matches(p) {
        Some(Juxtaposition::Horizontal)
    } else if vertical_pair().matches(p) {
        Some(Juxtaposition::Vertical)
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalDirection {
    /// The greatest entry precedes the least.
    MaxBeforeMin,
    /// The first entry exceeds the last.
    FirstGreaterThanLast,
}

/// Five decreasing blocks: low, high, middle, low, high.
pub fn five_block_form() -> BlockTemplate {
    BlockTemplate::new(5, 3, &[(0, 0), (1, 2), (2, 1), (3, 0), (4, 2)])
}

pub fn extremal_templates(direction: ExtremalDirection) -> [BlockTemplate; 2] {
    match direction {
        ExtremalDirection::MaxBeforeMin => [five_block_form(), vertical_pair()],
        ExtremalDirection::FirstGreaterThanLast => [five_block_form().transpose(), horizontal_pair()],
    }
}

pub(crate) fn no_three_plus_one_or_3412() -> [Permutation; 3] {
    ["2341", "4123", "3412"].map(|s| s.parse().expect("literal"))
}

pub fn matches_extremal_forms(p: &Permutation, direction: ExtremalDirection) -> Result<bool> {
    if !avoids_all(p, &no_three_plus_one_or_3412()) {
        return Err(Error::Precondition(format!("{p} is not in Av(2341, 4123, 3412)")));
    }
    let n = p.len();
    if n >= 2 {
        let v = p.values();
        let pos = p.positions();
        match direction {
            ExtremalDirection::MaxBeforeMin if pos[n - 1] > pos[0] => {
                return Err(Error::Precondition(format!(
                    "least entry (position {}) precedes greatest (position {})",
                    pos[0] + 1,
                    pos[n - 1] + 1
                )));
            }
            ExtremalDirection::FirstGreaterThanLast if v[0] < v[n - 1] => {
                return Err(Error::Precondition(format!("first entry {} is below last {}", v[0], v[n - 1])));
            }
            _ => {}
        }
    }
    if n <= 2 {
        return Ok(true);
    }
    Ok(extremal_templates(direction).iter().any(|t| t.matches(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;

    #[test]
    fn juxtaposition_examples() {
        assert_eq!(decreasing_juxtaposition(&perm!("321")), Some(Juxtaposition::Horizontal));
        assert_eq!(decreasing_juxtaposition(&perm!("2413")), Some(Juxtaposition::Vertical));
        assert_eq!(decreasing_juxtaposition(&perm!("3142")), Some(Juxtaposition::Horizontal));
        assert_eq!(decreasing_juxtaposition(&perm!("123")), None);
        assert_eq!(decreasing_juxtaposition(&Permutation::empty()), Some(Juxtaposition::Horizontal));
    }

    #[test]
    fn cut_enumeration_counts() {
        // non-decreasing 2-vectors over 0..=3: C(5, 2) = 10
        let mut cuts = vec![0, 0];
        let mut seen = 1;
        while next_cuts(&mut cuts, 3) {
            seen += 1;
        }
        assert_eq!(seen, 10);
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(matches_extremal_forms(&perm!("21"), ExtremalDirection::MaxBeforeMin), Ok(true));
        assert!(matches_extremal_forms(&perm!("3142"), ExtremalDirection::MaxBeforeMin).is_err());
        assert!(matches_extremal_forms(&perm!("3412"), ExtremalDirection::MaxBeforeMin).is_err());
        assert_eq!(matches_extremal_forms(&perm!("2413"), ExtremalDirection::MaxBeforeMin), Ok(true));
        assert_eq!(matches_extremal_forms(&perm!("3142"), ExtremalDirection::FirstGreaterThanLast), Ok(true));
        assert!(matches_extremal_forms(&perm!("2413"), ExtremalDirection::FirstGreaterThanLast).is_err());
    }

    #[test]
    fn transpose_commutes_with_inverse() {
        let t = five_block_form();
        for n in 0..=6 {
            for p in Permutation::all(n) {
                assert_eq!(t.matches(&p), t.transpose().matches(&p.inverse()), "{p}");
            }
        }
    }
}
