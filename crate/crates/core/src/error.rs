use thiserror::Error;

/// Errors raised while building or querying an edge shift and its catalogs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShiftError {
    #[error("graph has no vertices or no edges")]
    EmptyGraph,
    #[error("vertex `{0}` has no incoming edge")]
    SourceVertex(String),
    #[error("vertex `{0}` has no outgoing edge")]
    SinkVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("edge id `{0}` used twice")]
    DuplicateEdge(String),
    #[error("illegal word: {0}")]
    IllegalWord(String),
    #[error("illegal cycle: {0}")]
    IllegalCycle(String),
    #[error("depth {depth} too small, need at least {min}")]
    DepthTooSmall { depth: usize, min: usize },
    #[error("the set is empty or the whole space")]
    TrivialSet,
    #[error("the invariant set is not prime")]
    NotPrime,
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T, E = ShiftError> = std::result::Result<T, E>;
