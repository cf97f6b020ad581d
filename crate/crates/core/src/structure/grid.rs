//! Corner and central cells.
//!
//! With `r` alternating inflections `I_1 < ... < I_r`, every non-extremal
//! entry gets slot coordinates `(a, b)`: the number of inflection x (resp. y)
//! coordinates below it. The occupied slots form a staircase band:
//!
//! * `(0, 0)` and `(r, r)` are the first and last corner cells;
//! * `(k, k - 1)` for an l-r inflection `I_k`, or `(k - 1, k)` for an r-l
//!   inflection, is the `k`-th corner cell;
//! * `(k, k)` for `1 <= k < r` is the central cell between corners `k` and `k + 1`.
//!
//! So there is one corner cell per extremal entry (`r + 2` of them) and
//! consecutive corners are separated by a central cell except for the first
//! two and the last two.

use serde::Serialize;

use super::extrema::{extrema_diagram, ExtremaDiagram, PathSource, Point};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Arrangement {
    /// Side by side in one row: the earlier cell is to the left.
    Horizontal,
    /// Stacked in one column: the earlier cell is below.
    Vertical,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellGrid {
    pub diagram: ExtremaDiagram,
    /// `r + 2` cells, each sorted by position.
    pub corner_cells: Vec<Vec<Point>>,
    /// `r - 1` cells; `central_cells[k - 1]` separates corners `k` and `k + 1`.
    pub central_cells: Vec<Vec<Point>>,
    /// `arrangements[k]` relates corners `k` and `k + 1`.
    pub arrangements: Vec<Arrangement>,
}

impl CellGrid {
    pub fn inflection_count(&self) -> usize {
        self.diagram.inflections.len()
    }

    /// Central cell between corners `k` and `k + 1`, if one exists.
    pub fn central_between(&self, k: usize) -> Option<&[Point]> {
        if k >= 1 && k < self.inflection_count() {
            Some(&self.central_cells[k - 1])
        } else {
            None
        }
    }

    /// Whether corners `k` and `k + 1` interlace as a parallel alternation.
    pub fn pair_interlaces(&self, k: usize) -> bool {
        interlaces(&self.corner_cells[k], &self.corner_cells[k + 1], self.arrangements[k])
    }
}

fn check_grid_precondition(d: &ExtremaDiagram) -> Result<()> {
    if d.lr_max_positions.len() < 2 || d.rl_min_positions.len() < 2 {
        return Err(Error::Precondition("need at least two l-r maxima and two r-l minima".into()));
    }
    if d.has_shared_extremum() {
        return Err(Error::Precondition("an entry is both an l-r max and an r-l min".into()));
    }
    if !d.inflections_alternate() {
        return Err(Error::Precondition("inflections do not alternate".into()));
    }
    Ok(())
}

pub fn cell_grid(p: &Permutation) -> Result<CellGrid> {
    let diagram = extrema_diagram(p)?;
    check_grid_precondition(&diagram)?;
    let infl = &diagram.inflections;
    let r = infl.len();

    // slot of the k-th corner, k in 0..=r+1
    let corner_slot = |k: usize| -> (usize, usize) {
        if k == 0 {
            (0, 0)
        } else if k == r + 1 {
            (r, r)
        } else if infl[k - 1].source == PathSource::LrMax {
            (k, k - 1)
        } else {
            (k - 1, k)
        }
    };

    let mut extremal = vec![false; p.len() + 1];
    for &pos in diagram.lr_max_positions.iter().chain(&diagram.rl_min_positions) {
        extremal[pos] = true;
    }
    let mut corner_cells = vec![Vec::new(); r + 2];
    let mut central_cells = vec![Vec::new(); r - 1];
    for (i, &y) in p.values().iter().enumerate() {
        let x = i + 1;
        if extremal[x] {
            continue;
        }
        let a = infl.iter().filter(|f| f.x < x).count();
        let b = infl.iter().filter(|f| f.y < y).count();
        let point = Point { x, y };
        if a == b && a >= 1 && a < r {
            central_cells[a - 1].push(point);
            continue;
        }
        let k = if a == b && a == 0 {
            0
        } else if a == b && a == r {
            r + 1
        } else if a == b + 1 {
            a
        } else if b == a + 1 {
            b
        } else {
            return Err(Error::Precondition(format!("entry {point:?} lies outside the band")));
        };
        if corner_slot(k) != (a, b) {
            return Err(Error::Precondition(format!("entry {point:?} lies outside the band")));
        }
        corner_cells[k].push(point);
    }
    let arrangements = (0..=r)
        .map(|k| {
            let (a0, b0) = corner_slot(k);
            let (a1, b1) = corner_slot(k + 1);
            debug_assert!(a0 == a1 || b0 == b1);
            if b0 == b1 {
                Arrangement::Horizontal
            } else {
                Arrangement::Vertical
            }
        })
        .collect();
    Ok(CellGrid { diagram, corner_cells, central_cells, arrangements })
}

/// Union of the cells, read left to right, is decreasing.
pub fn jointly_decreasing(cells: &[&[Point]]) -> bool {
    let mut all: Vec<Point> = cells.iter().flat_map(|c| c.iter().copied()).collect();
    all.sort_unstable_by_key(|p| p.x);
    all.windows(2).all(|w| w[0].y > w[1].y)
}

fn is_decreasing_cell(cell: &[Point]) -> bool {
    jointly_decreasing(&[cell])
}

/// Two equal-size, non-empty decreasing cells that interleave as in the
/// 123-avoiding parallel alternations. Horizontally (first cell left) the
/// values must read `q1 > p1 > q2 > p2 > ...`; vertically (first cell below)
/// the positions must read `p1, q1, p2, q2, ...`.
pub fn interlaces(first: &[Point], second: &[Point], arrangement: Arrangement) -> bool {
    if first.is_empty() || first.len() != second.len() {
        return false;
    }
    if !is_decreasing_cell(first) || !is_decreasing_cell(second) {
        return false;
    }
    let mut tagged: Vec<(Point, bool)> =
        first.iter().map(|&p| (p, true)).chain(second.iter().map(|&p| (p, false))).collect();
    match arrangement {
        Arrangement::Horizontal => {
            tagged.sort_unstable_by_key(|t| std::cmp::Reverse(t.0.y));
            tagged.iter().enumerate().all(|(i, &(_, is_first))| is_first == (i % 2 == 1))
        }
        Arrangement::Vertical => {
            tagged.sort_unstable_by_key(|t| t.0.x);
            tagged.iter().enumerate().all(|(i, &(_, is_first))| is_first == (i % 2 == 0))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;

    fn pts(cell: &[Point]) -> Vec<(usize, usize)> {
        cell.iter().map(|p| (p.x, p.y)).collect()
    }

    #[test]
    fn grid_of_2413_is_empty() {
        let g = cell_grid(&perm!("2413")).unwrap();
        assert_eq!(g.corner_cells.len(), 4);
        assert_eq!(g.central_cells.len(), 1);
        assert!(g.corner_cells.iter().chain(&g.central_cells).all(Vec::is_empty));
    }

    #[test]
    fn figure_example_uses_central_cells() {
        let g = cell_grid(&perm!("4,1,3,7,5,2,10,8,6,9")).unwrap();
        assert_eq!(g.corner_cells.len(), 7);
        assert!(g.corner_cells.iter().all(Vec::is_empty));
        let central: Vec<Vec<(usize, usize)>> = g.central_cells.iter().map(|c| pts(c)).collect();
        assert_eq!(central, vec![vec![(3, 3)], vec![(5, 5)], vec![], vec![(8, 8)]]);
    }

    #[test]
    fn parallel_alternation_cells_interlace() {
        let g = cell_grid(&perm!("9,7,5,3,1,10,8,6,4,2")).unwrap();
        assert_eq!(g.corner_cells.len(), 4);
        assert_eq!(pts(&g.corner_cells[1]), vec![(2, 7), (3, 5), (4, 3)]);
        assert_eq!(pts(&g.corner_cells[2]), vec![(7, 8), (8, 6), (9, 4)]);
        assert_eq!(g.arrangements[1], Arrangement::Horizontal);
        assert!(g.pair_interlaces(1));
        let inv = cell_grid(&perm!("9,7,5,3,1,10,8,6,4,2").inverse()).unwrap();
        assert_eq!(inv.arrangements[1], Arrangement::Vertical);
        assert!(inv.pair_interlaces(1));
    }

    #[test]
    fn precondition_failures() {
        assert!(cell_grid(&perm!("351624")).is_err());
        assert!(cell_grid(&perm!("321")).is_err());
        assert!(cell_grid(&perm!("1234")).is_err());
    }

    #[test]
    fn interlace_orientation() {
        let p = |x, y| Point { x, y };
        // left cell {5,3}, right cell {6,4}: 6 > 5 > 4 > 3
        assert!(interlaces(&[p(1, 5), p(2, 3)], &[p(3, 6), p(4, 4)], Arrangement::Horizontal));
        assert!(!interlaces(&[p(1, 6), p(2, 4)], &[p(3, 5), p(4, 3)], Arrangement::Horizontal));
        // lower cell first by position
        assert!(interlaces(&[p(1, 2), p(3, 1)], &[p(2, 4), p(4, 3)], Arrangement::Vertical));
        assert!(!interlaces(&[p(2, 2), p(4, 1)], &[p(1, 4), p(3, 3)], Arrangement::Vertical));
        assert!(!interlaces(&[], &[], Arrangement::Vertical));
        assert!(!interlaces(&[p(1, 5)], &[p(3, 6), p(4, 4)], Arrangement::Horizontal));
    }
}
