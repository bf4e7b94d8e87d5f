//! Face lattices, edge-minimising polytope families and exact bounds on
//! edge counts of `d`-polytopes with few vertices.

pub mod bounds;
pub mod combinatorics;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod iso;
mod json;
pub mod lattice;
pub mod polytope;
pub mod verify;

pub use constructions::Family;
pub use error::{Error, Result};
pub use lattice::FaceLattice;
pub use polytope::{CombinatorialPolytope, VertexSet};
