use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime suitable as a coefficient modulus")]
    NotPrime(u64),
    #[error("operands come from different ring contexts")]
    MixedRings,
    #[error("generator {index} is not homogeneous")]
    Inhomogeneous { index: usize },
    #[error("matrix entry ({row},{col}) has degree {found}, expected {expected}")]
    DegreeMismatch {
        row: usize,
        col: usize,
        found: i64,
        expected: i64,
    },
    #[error("degree cap {cap} exceeded while processing degree {degree}")]
    TruncationExceeded { cap: u32, degree: i64 },
    #[error("operation requires a nonzero module")]
    ZeroModule,
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("hypothesis not satisfied: {0}")]
    Inapplicable(String),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
