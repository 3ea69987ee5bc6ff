use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a graph needs at least one node")]
    EmptyGraph,

    #[error("edge ({u}, {v}) has an endpoint outside 0..{node_count}")]
    EndpointOutOfRange { u: usize, v: usize, node_count: usize },

    #[error("edge ({node}, {node}) is a self-loop")]
    SelfLoop { node: usize },

    #[error("node {node} is outside 0..{node_count}")]
    NodeOutOfRange { node: usize, node_count: usize },

    #[error("a ring needs at least 3 nodes, got {0}")]
    RingTooSmall(usize),

    #[error("link ({j}, {k}) already exists")]
    EdgeExists { j: usize, k: usize },

    #[error("a link needs two distinct agents, got ({0}, {0})")]
    SameEndpoints(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid sweep range {n_min}..={n_max}: need 4 <= min <= max")]
    SweepRange { n_min: usize, n_max: usize },

    #[error("summary is missing ring size {n} at distance {d}")]
    MissingCoverage { n: usize, d: usize },
}
