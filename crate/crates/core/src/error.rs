use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("combined order {0} exceeds 64 vertices")]
    SizeOverflow(usize),
    #[error("canonical form needs n <= {max}, got {n}")]
    CanonicalTooLarge { n: usize, max: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid transform: {0}")]
    InvalidTransform(String),
    #[error("no real root in the requested bracket")]
    NoRoot,
    #[error("inconsistent: {0}")]
    Inconsistent(String),
    #[error("budget exceeded after {0} s")]
    Budget(u64),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
