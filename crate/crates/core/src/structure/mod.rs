//! Geometry of the class: extrema, cells, tiles and the simple-permutation
//! characterization.

mod classify;
mod extrema;
mod grid;
mod templates;
mod theorem;
mod tiles;

pub use classify::{classify_simple, horizontal_alternation, is_parallel_alternation, parallel_alternations, SimpleCategory};
pub use extrema::{extrema_diagram, inflections_alternate, ExtremaDiagram, Inflection, PathSource, Point};
pub use grid::{cell_grid, interlaces, jointly_decreasing, Arrangement, CellGrid};
pub use templates::{
    decreasing_juxtaposition, extremal_templates, five_block_form, horizontal_pair, matches_extremal_forms,
    vertical_pair, BlockTemplate, ExtremalDirection, Juxtaposition,
};
pub use theorem::{satisfies_theorem_conditions, theorem_conditions, TheoremConditions};
pub use tiles::{tile_types, TileKind, TileOrientation, TileType};
