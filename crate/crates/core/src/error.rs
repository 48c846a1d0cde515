use thiserror::Error;

use crate::graph::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid graph: {}", join_violations(.0))]
    InvalidGraph(Vec<Violation>),

    #[error("graph has {0} vertices; at least 3 are required")]
    TooSmall(usize),

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge ({0},{1}) has invalid weight {2}")]
    InvalidWeight(usize, usize, f64),

    #[error("({0},{1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("query endpoints must differ")]
    EqualNodes,

    #[error("node {0} out of range")]
    NodeOutOfRange(usize),

    #[error("malformed tree: {0}")]
    MalformedTree(String),

    #[error("node {node} does not carry colour {colour}")]
    ColourMismatch { node: usize, colour: usize },

    #[error("node {0} carries more than three colours: {1}")]
    TooManyColours(usize, String),

    #[error("face summaries are not composable: target {0} differs from source {1}")]
    IncompatibleFaces(usize, usize),

    #[error("faces {0} and {1} are not adjacent")]
    NotAdjacentFaces(usize, usize),

    #[error("range [{0},{1}] is empty or out of bounds")]
    BadRange(usize, usize),

    #[error("no beer path exists between {0} and {1}")]
    Unreachable(usize, usize),

    #[error("vertex {0} is not in the fan of {1}")]
    NotInFan(usize, usize),

    #[error("{1} lies in the fan of {0}; answer the query directly")]
    SameFan(usize, usize),

    #[error("face {0} does not exist")]
    UnknownFace(usize),

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degenerate tree: {0}")]
    DegenerateTree(String),

    #[error("graph file: {0}")]
    Format(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
