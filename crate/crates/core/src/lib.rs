//! Structure and enumeration of the (3+1)-free permutations `Av(2341, 4123)`.
//!
//! * [`perm`]: permutations, containment, intervals, inflation.
//! * [`poset`]: the dimension-2 poset of a permutation and `(a+b)`-freeness.
//! * [`structure`]: extrema diagrams, cell grids, tiles and the structural
//!   characterization of the simple members of `Av(2341, 4123, 3412)`.
//! * [`series`]: exact truncated power series and the generating functions.
//! * [`harness`]: class enumeration and the cross-checking report.

pub mod error;
pub mod harness;
pub mod perm;
pub mod poset;
pub mod series;
pub mod structure;

pub use error::{Error, Result};
pub use perm::Permutation;
