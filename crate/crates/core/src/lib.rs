//! Recognition of Eulerian multigraphs whose cycle decompositions all have
//! the same number of cycles.
//!
//! The core of the crate is the vertex-edge decomposition in [`recognition`],
//! which splits a biconnected Eulerian graph along vertex-edge separators and
//! answers the uniqueness question from the pieces in `O(n (n + m))` time.
//! [`oracle`] holds exponential reference implementations used for testing,
//! and [`generators`] builds the graph families the tests and benchmarks run
//! on.

pub mod bench;
pub mod connectivity;
pub mod error;
pub mod generators;
pub mod multigraph;
pub mod operators;
pub mod oracle;
pub mod recognition;
pub mod rng;

pub use error::{Error, ParseErrorKind, Result};
pub use multigraph::{
    parse_graph, write_graph, Cycle, CycleDecomposition, EdgeId, MultiGraph, Relabelling, Subgraph,
    VertexId,
};
