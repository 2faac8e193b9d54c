use thiserror::Error;

/// Errors raised by graph construction and the planarity pipeline.
///
/// Vertex numbers carried by the variants are 1-based, matching how graphs
/// are read and written.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("edge {edge} is a loop at vertex {vertex}")]
    LoopEdge { edge: usize, vertex: usize },
    #[error("edge {edge} references vertex {vertex}, but the graph has {n} vertices")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("vertex {0} is not reachable from the root")]
    NotConnected(usize),
    #[error("rotation enumeration would visit {0} systems, above the oracle limit")]
    TooLarge(u128),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("rotation system does not match the graph: {0}")]
    RotationMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
