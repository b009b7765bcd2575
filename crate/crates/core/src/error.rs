use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph on {0} vertices exceeds the 64-vertex cap")]
    TooManyVertices(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("enumeration cap exceeded: n = {n}, supported up to {max}")]
    EnumerationCap { n: usize, max: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("polynomial has no real roots")]
    NoRealRoots,
    #[error("denominator vanishes on the interval")]
    PoleInInterval,
    #[error("matrix is not square")]
    NotSquare,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("beta {beta} rejected: {reason}")]
    BetaGuard { beta: String, reason: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
