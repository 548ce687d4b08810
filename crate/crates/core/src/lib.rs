//! Edge coloring of small hypergraphs.
//!
//! A [`Hypergraph`] is a vertex count and an ordered list of edges. On top of
//! it this crate provides duality and derived graphs, degree/rank
//! statistics, design recognition, exact and greedy edge coloring, design
//! constructions, isomorph-free enumeration, and executable versions of the
//! chromatic-index bounds `C1`..`C5` for linear hypergraphs.

pub mod bitset;
pub mod coloring;
pub mod conjectures;
pub mod constructions;
pub mod design;
pub mod enumeration;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod random;
pub mod stats;

pub use coloring::{
    exact_chromatic_index, greedy_color, validate_coloring, Coloring, DEFAULT_BUDGET,
};
pub use graph::Graph;
pub use hypergraph::{validate_raw, Hypergraph, HypergraphError, ValidationReport};
pub use stats::{count_triangles, stats, StatsProfile, TriangleCount};
