use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Parameters outside the documented range of a family, oracle, or constructor.
    #[error("invalid parameters: {0}")]
    InvalidSpec(String),

    /// A desk-scale search (sieve, decomposition, progression) ran out of room.
    #[error("not found: {0}")]
    NotFound(String),

    #[error("edge ({u}, {v}) has difference {difference}, which is neither odd nor 2")]
    NotTwoOddLabeling { u: usize, v: usize, difference: i64 },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("not a cycle: {0}")]
    NotACycle(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("size mismatch: expected {expected} entries, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
