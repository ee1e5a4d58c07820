use thiserror::Error;

/// Domain violations for the pure integer operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("curve degree must be >= 1, got {0}")]
    NonPositiveDegree(i64),
    #[error("no window exists for c = {c}, y = {y}: need c >= 4 and c-1 <= y < c^2/4")]
    OutsideWindows { c: i64, y: i64 },
    #[error("y = {y} is not strictly inside window t = {t} for c = {c}")]
    NotInWindowInterior { c: i64, t: i64, y: i64 },
    #[error("c must be >= {min}, got {c}")]
    CTooSmall { c: i64, min: i64 },
    #[error("enumeration limited to c <= {limit}, got {c}")]
    EnumerationTooLarge { c: i64, limit: i64 },
    #[error("result does not fit in 64-bit output for c = {c}, y = {y}")]
    OutOfRepresentableRange { c: i64, y: i64 },
}
