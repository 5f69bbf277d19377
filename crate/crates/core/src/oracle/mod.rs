//! Ground-truth Tutte polynomials of small multigraphs by deletion–contraction.

mod canonical;
mod graph;
mod tutte;

pub use canonical::{canonical_key, CanonicalKey};
pub use graph::Multigraph;
pub use tutte::{tutte, EdgeChoice, TutteOracle, DEFAULT_EDGE_BOUND};
