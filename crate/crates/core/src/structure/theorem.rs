use serde::Serialize;

use super::grid::{cell_grid, jointly_decreasing, CellGrid};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Outcome of each condition. Conditions after `(a)` are only meaningful
/// when the grid exists, and are reported false otherwise.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TheoremConditions {
    pub alternating_inflections: bool,
    pub decreasing_corners: bool,
    pub corner_pairs: bool,
    pub unique_interlacing_partner: bool,
    pub central_cells: bool,
}

impl TheoremConditions {
    pub fn all(&self) -> bool {
        self.alternating_inflections
            && self.decreasing_corners
            && self.corner_pairs
            && self.unique_interlacing_partner
            && self.central_cells
    }
}

pub fn theorem_conditions(p: &Permutation) -> Result<TheoremConditions> {
    if p.len() <= 2 {
        return Err(Error::Precondition(format!("length {} is at most 2", p.len())));
    }
    let Ok(grid) = cell_grid(p) else {
        return Ok(TheoremConditions::default());
    };
    Ok(evaluate(&grid))
}

pub fn satisfies_theorem_conditions(p: &Permutation) -> Result<bool> {
    Ok(theorem_conditions(p)?.all())
}

fn evaluate(g: &CellGrid) -> TheoremConditions {
    let corners = &g.corner_cells;
    let pairs = corners.len() - 1;
    let interlacing: Vec<bool> = (0..pairs).map(|k| g.pair_interlaces(k)).collect();

    let decreasing_corners = corners.iter().all(|c| jointly_decreasing(&[c.as_slice()]));
    let corner_pairs = (0..pairs).all(|k| {
        interlacing[k] || jointly_decreasing(&[corners[k].as_slice(), &corners[k + 1]])
    });
    let unique_interlacing_partner = corners.iter().enumerate().all(|(j, c)| {
        let partners = (j > 0 && interlacing[j - 1]) as usize + (j < pairs && interlacing[j]) as usize;
        c.is_empty() || partners == 1
    });
    let central_cells = (0..pairs).all(|k| match g.central_between(k) {
        None => true,
        Some(s) if s.len() > 1 => false,
        Some(s) if interlacing[k] => s.is_empty(),
        Some(s) => jointly_decreasing(&[corners[k].as_slice(), s, &corners[k + 1]]),
    });
    TheoremConditions {
        alternating_inflections: true,
        decreasing_corners,
        corner_pairs,
        unique_interlacing_partner,
        central_cells,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;
    use crate::perm::{avoids_all, is_simple};
    use crate::structure::templates::no_three_plus_one_or_3412;

    #[test]
    fn examples() {
        assert_eq!(satisfies_theorem_conditions(&perm!("4,1,3,7,5,2,10,8,6,9")), Ok(true));
        assert_eq!(satisfies_theorem_conditions(&perm!("5274163")), Ok(false));
        assert_eq!(satisfies_theorem_conditions(&perm!("2413")), Ok(true));
        assert_eq!(satisfies_theorem_conditions(&perm!("9,7,5,3,1,10,8,6,4,2")), Ok(true));
        assert!(satisfies_theorem_conditions(&perm!("21")).is_err());
        assert!(satisfies_theorem_conditions(&Permutation::empty()).is_err());
    }

    #[test]
    fn equivalence_up_to_eight() {
        let basis = no_three_plus_one_or_3412();
        for n in 3..=8 {
            for p in Permutation::all(n) {
                let expected = is_simple(&p) && avoids_all(&p, &basis);
                assert_eq!(satisfies_theorem_conditions(&p), Ok(expected), "{p}");
            }
        }
    }
}
