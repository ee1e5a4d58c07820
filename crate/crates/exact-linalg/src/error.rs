use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime field characteristic must be at least 5, got {0}")]
    PrimeTooSmall(u64),
    #[error("entry count {len} does not match {rows}x{cols}")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },
    #[error("entry {position} belongs to a different field than the matrix")]
    MixedField { position: usize },
    #[error("rows have differing lengths")]
    RaggedRows,
    #[error("cannot parse scalar from {0:?}")]
    UnparsableScalar(String),
    #[error("denominator vanishes in this field: {0:?}")]
    DenominatorVanishes(String),
}
