use thiserror::Error;

use crate::graph::Vertex;
use crate::io::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("adjacency is not symmetric: {1} is a neighbor of {0} but not vice versa")]
    Asymmetric(Vertex, Vertex),

    #[error("graph has {n} vertices, above the enumeration guard of {max_n}")]
    GuardExceeded { n: usize, max_n: usize },
    #[error("input graph is not a forest")]
    NotForest,
    #[error("maximum degree {found} exceeds the allowed {allowed}")]
    MaxDegreeTooLarge { found: usize, allowed: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// The requested quantity is an open problem; no value is known.
    #[error("unknown: {0}")]
    Unknown(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
