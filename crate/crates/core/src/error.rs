use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid Dynkin type {family}{rank}")]
    InvalidType { family: char, rank: usize },
    #[error("cannot parse Dynkin type from {0:?}")]
    ParseType(String),
    #[error("level must be at least {min}, got {level}")]
    Level { level: usize, min: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("images do not form a permutation")]
    NotPermutation,
    #[error("mutation sequence does not close up to the permutation")]
    NotALoop,
    #[error("non-positive Y-value {value} at vertex {vertex}")]
    Domain { vertex: usize, value: f64 },
    #[error("fixed-point iteration did not converge (residual {residual:e})")]
    NoConvergence { residual: f64 },
    #[error("eigenvalues are not roots of unity of order {order} (snap error {error:e})")]
    NotRootsOfUnity { order: usize, error: f64 },
    #[error("D multiset is not contained in N multiset")]
    DivisionNotExact,
    #[error("non-integral exponent {0}")]
    NonIntegral(String),
    #[error("singular matrix")]
    Singular,
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("truncation order must be positive")]
    Order,
    #[error("output: {message}")]
    Io { kind: std::io::ErrorKind, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
