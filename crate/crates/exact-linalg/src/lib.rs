//! Exact linear algebra over prime fields F_p (p >= 5) and
//! arbitrary-precision rationals: matrix rank and kernel bases with no
//! rounding anywhere. Rational elimination is fraction-free so coefficient
//! growth stays polynomial in the matrix size.

mod error;
mod field;
mod matrix;
mod scalar;

pub use error::LinalgError;
pub use field::{is_prime_u64, FieldSpec};
pub use matrix::Matrix;
pub use scalar::Scalar;
