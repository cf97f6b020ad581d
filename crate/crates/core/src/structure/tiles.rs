use serde::Serialize;

use super::extrema::{Inflection, PathSource};
use super::grid::cell_grid;
use super::theorem::satisfies_theorem_conditions;
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TileKind {
    A,
    J,
    I,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TileOrientation {
    #[serde(rename = "2413")]
    P2413,
    #[serde(rename = "3142")]
    P3142,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TileType {
    pub kind: TileKind,
    pub orientation: TileOrientation,
}

impl TileType {
    pub fn is_interlacing(&self) -> bool {
        matches!(self.kind, TileKind::A | TileKind::I)
    }
}

impl std::fmt::Display for TileType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let o = match self.orientation {
            TileOrientation::P2413 => "2413",
            TileOrientation::P3142 => "3142",
        };
        write!(f, "{:?}({o})", self.kind)
    }
}

/// Positions (1-based) of the two extremal entries joined at an inflection.
fn extremal_pair(p: &Permutation, infl: &Inflection) -> [usize; 2] {
    let other = p.positions()[infl.y - 1] + 1;
    match infl.source {
        PathSource::LrMax => [other, infl.x],
        PathSource::RlMin => [infl.x, other],
    }
}

/// One tile per pair of consecutive inflections. The tile's four extremal
/// entries form 2413 or 3142; it is the interlacing kind (A or I) when the
/// two corner cells it flanks interlace, and the decreasing kind (J or R)
/// otherwise, including when the tile holds no interior points.
pub fn tile_types(p: &Permutation) -> Result<Vec<TileType>> {
    if p.len() <= 2 || !satisfies_theorem_conditions(p)? {
        return Err(Error::Precondition(format!("{p} is not a simple member of Av(2341, 4123, 3412)")));
    }
    let grid = cell_grid(p)?;
    let infl = &grid.diagram.inflections;
    let mut tiles = Vec::with_capacity(infl.len() - 1);
    for k in 1..infl.len() {
        let mut positions: Vec<usize> =
            extremal_pair(p, &infl[k - 1]).into_iter().chain(extremal_pair(p, &infl[k])).collect();
        positions.sort_unstable();
        let values: Vec<usize> = positions.iter().map(|&x| p.at(x - 1)).collect();
        let pattern = Permutation::standardize(&values);
        let orientation = match (infl[k - 1].source, pattern.to_string().as_str()) {
            (PathSource::LrMax, "2413") => TileOrientation::P2413,
            (PathSource::RlMin, "3142") => TileOrientation::P3142,
            (_, other) => {
                return Err(Error::Precondition(format!("tile {k} of {p} has extremal pattern {other}")));
            }
        };
        let kind = match (orientation, grid.pair_interlaces(k)) {
            (TileOrientation::P2413, true) => TileKind::A,
            (TileOrientation::P2413, false) => TileKind::J,
            (TileOrientation::P3142, true) => TileKind::I,
            (TileOrientation::P3142, false) => TileKind::R,
        };
        tiles.push(TileType { kind, orientation });
    }
    Ok(tiles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;

    fn tile(kind: TileKind) -> TileType {
        let orientation = match kind {
            TileKind::A | TileKind::J => TileOrientation::P2413,
            TileKind::I | TileKind::R => TileOrientation::P3142,
        };
        TileType { kind, orientation }
    }

    #[test]
    fn length_four() {
        assert_eq!(tile_types(&perm!("2413")).unwrap(), vec![tile(TileKind::J)]);
        assert_eq!(tile_types(&perm!("3142")).unwrap(), vec![tile(TileKind::R)]);
        assert!(tile_types(&perm!("1234")).is_err());
        assert!(tile_types(&perm!("5274163")).is_err());
    }

    #[test]
    fn parallel_alternation_tiles_interlace() {
        let tiles = tile_types(&perm!("9,7,5,3,1,10,8,6,4,2")).unwrap();
        assert_eq!(tiles, vec![tile(TileKind::I)]);
        let tiles = tile_types(&perm!("9,7,5,3,1,10,8,6,4,2").inverse()).unwrap();
        assert_eq!(tiles, vec![tile(TileKind::A)]);
    }

    #[test]
    fn figure_example_tiles_alternate() {
        let tiles = tile_types(&perm!("4,1,3,7,5,2,10,8,6,9")).unwrap();
        use TileKind::*;
        assert_eq!(tiles.iter().map(|t| t.kind).collect::<Vec<_>>(), vec![R, J, R, J]);
        assert_eq!(tiles[0].to_string(), "R(3142)");
    }

    #[test]
    fn orientation_matches_kind() {
        for n in 4..=8 {
            for p in Permutation::all(n) {
                if let Ok(tiles) = tile_types(&p) {
                    for t in tiles {
                        assert_eq!(t, tile(t.kind), "{p}");
                    }
                }
            }
        }
    }
}
