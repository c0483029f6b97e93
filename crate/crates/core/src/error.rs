use alloc::string::String;

use crate::graph::{Colour, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex counts differ: {left} vs {right}")]
    VertexCountMismatch { left: usize, right: usize },
    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(Vertex, Vertex),
    #[error("subgraph has an edge ({0}, {1}) absent from the host")]
    NotSubgraph(Vertex, Vertex),
    #[error("colour {colour} out of range 1..={r}")]
    ColourOutOfRange { colour: Colour, r: Colour },
    #[error("edge ({0}, {1}) has no colour")]
    Uncoloured(Vertex, Vertex),
    #[error("edges share vertex {0}")]
    NotAMatching(Vertex),
    #[error("matching is not perfect")]
    NotPerfect,
    #[error("vertex {0} appears twice")]
    RepeatedVertex(Vertex),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid Hamilton cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("rotation rejected: {0}")]
    Rotation(String),
    #[error("clean-up failed: {0}")]
    Cleanup(String),
    #[error("search failed: {0}")]
    SearchFailed(String),
}

pub type Result<T> = core::result::Result<T, Error>;
