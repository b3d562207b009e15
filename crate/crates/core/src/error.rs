use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {0} is not present in the graph")]
    EdgeNotPresent(Edge),
    #[error("graph has no edges")]
    NoEdges,
    #[error("edge {0} has no color assigned")]
    MissingColor(Edge),
    #[error("graph is Class 1; a Class 2 graph is required")]
    NotClass2,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("edge set is not mitigating")]
    NotMitigating,
    #[error("mitigating set of size {given} is not minimum; a mitigating set of size {} exists", .smaller.len())]
    NotMinimum { given: usize, smaller: Vec<Edge> },
    #[error("search budget of {0} steps exhausted")]
    BudgetExceeded(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// Parse failures for the text graph formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed graph6 header: {0}")]
    Graph6Header(String),
    #[error("invalid graph6 character {byte:#04x} at offset {offset}")]
    Graph6Char { offset: usize, byte: u8 },
    #[error("graph6 bit stream truncated: expected {expected} data bytes, found {found}")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("graph6 trailing garbage: {0}")]
    Graph6Trailing(String),
    #[error("edge list: {0}")]
    EdgeListSyntax(String),
    #[error("edge list declares {declared} edges but lists {found}")]
    EdgeListCount { declared: usize, found: usize },
}
