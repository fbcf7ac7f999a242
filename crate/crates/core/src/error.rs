use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not skew-symmetric: {0}")]
    NotSkew(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("bad reduction: {0}")]
    BadReduction(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown fixture: {0}")]
    UnknownFixture(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
