use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("entries must lie in {{-1, 0, 1}}")]
    NotTernary,
    #[error("diagonal entries must all equal 1")]
    NonUnitDiagonal,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero vector")]
    ZeroVector,
    #[error("case/tensor mismatch: {0}")]
    CaseMismatch(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
