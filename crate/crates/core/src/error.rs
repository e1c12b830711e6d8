use thiserror::Error;

/// Errors raised by graph construction and the coloring pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} references {side}-vertex {index}, but that side has {count} vertices")]
    IndexOutOfRange {
        edge: usize,
        side: char,
        index: usize,
        count: usize,
    },
    #[error("duplicate edge ({x}, {y}) in a simple graph")]
    DuplicateEdge { x: usize, y: usize },
    #[error("coloring has {got} entries but the graph has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
    #[error("color at edge {edge} must be a positive integer")]
    InvalidColor { edge: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("input coloring is not proper")]
    NotProper,
    #[error("infeasible degree sequence: {0}")]
    InfeasibleDegrees(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::PreconditionViolated(msg.into())
}
