use exact_linalg::LinalgError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointSchemeError {
    #[error("all three coordinates are zero")]
    ZeroPoint,
    #[error("duplicate point at index {index}")]
    DuplicatePoint { index: usize },
    #[error("point coordinates belong to a different field than the set")]
    FieldMismatch,
    #[error("operation requires a nonempty point set")]
    EmptyPointSet,
    #[error("degree {0} is negative")]
    NegativeDegree(i64),
    #[error("degree {0} is below the minimum 1 for this operation")]
    DegreeTooSmall(i64),
    #[error("no curves of degree {degree} pass through the set")]
    NoSections { degree: i64 },
    #[error("operation requires a prime field")]
    PrimeFieldRequired,
    #[error("character entries {entries:?} are not nonincreasing with last entry >= length")]
    InvalidCharacter { entries: Vec<i64> },
    #[error("curve form has all coefficients zero")]
    ZeroForm,
    #[error("degree {degree} needs {expected} coefficients, got {len}")]
    CoefficientCountMismatch {
        degree: i64,
        expected: usize,
        len: usize,
    },
    #[error("gave up after {tries} sampling attempts")]
    GenerationExhausted { tries: u32 },
    #[error("intersection type ({a},{b}) exceeds the rational point budget of F_{p}")]
    IntersectionTooLarge { a: i64, b: i64, p: u64 },
    #[error("point at index {index} does not lie on the intersection")]
    PointNotInIntersection { index: usize },
    #[error("unreadable point-set file: {0}")]
    BadFile(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
