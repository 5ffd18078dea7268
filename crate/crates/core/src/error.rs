use thiserror::Error;

use crate::graph::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("{0:?} is not a minimal separator")]
    NotMinimalSeparator(VertexSet),
    #[error("separators {0:?} and {1:?} cross")]
    Crossing(VertexSet, VertexSet),
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(usize, usize),
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertex {0} lies in the separator")]
    VertexInSeparator(usize),
    #[error("{0:?} is not a clique")]
    NotClique(VertexSet),
    #[error("graph is not a supergraph of the base graph on the same vertex set")]
    NotSupergraph,
    #[error("object belongs to a graph with {found} vertices, expected {expected}")]
    HostMismatch { expected: usize, found: usize },
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("not a tree decomposition of the graph")]
    NotTreeDecomposition,
    #[error("extender contract violated: {0}")]
    ExtenderContract(String),
}
