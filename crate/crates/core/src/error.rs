use thiserror::Error;

/// Errors raised by geometric operations, move replay and synthesis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input")]
    Empty,
    #[error("degenerate simplex: {0}")]
    Degenerate(String),
    #[error("points span an affine subspace of dimension {found}, expected {expected}")]
    Span { expected: usize, found: usize },
    #[error("point {0} lies outside the polytope")]
    Outside(String),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("replay failed at step {step}: {reason}")]
    Replay { step: usize, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("gave up after {0} nodes")]
    Budget(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
