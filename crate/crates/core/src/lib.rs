//! Left-Right planarity testing and embedding.
//!
//! The pipeline runs in four linear passes:
//!
//! 1. [`tremaux`]: a DFS builds the Trémaux tree and computes `low`, `low2`
//!    and the block/thin/thick class of every tree edge.
//! 2. [`ttorder`]: a bucket sort orders the outgoing edges of every vertex,
//!    thin before thick at equal low.
//! 3. [`lrtest`]: constraint stacks are merged bottom-up; either a merge
//!    fails (not planar) or every back-edge gets a side `λ = ±1`.
//! 4. [`embed`]: the sides determine a rotation system, which is checked by
//!    tracing faces and applying Euler's formula.
//!
//! [`oracle`] holds independent ground truth (brute-force planarity by
//! rotation enumeration and a literal strong-coloring checker) plus graph
//! generators.

pub mod embed;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod lrtest;
pub mod oracle;
pub mod pipeline;
pub mod tremaux;
pub mod ttorder;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, HalfEdge, VertexId};
pub use pipeline::{analyze, Analysis};
