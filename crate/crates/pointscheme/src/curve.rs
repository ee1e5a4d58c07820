use crate::error::PointSchemeError;
use crate::hilbert::{eval_monomial, mono_index, monomial_basis, monomial_count};
use crate::points::ProjPoint;
use exact_linalg::{FieldSpec, Scalar};
use serde::Serialize;
use std::fmt;

/// A nonzero homogeneous plane form, stored as its coefficient vector in the
/// canonical monomial order of its degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveForm {
    field: FieldSpec,
    degree: i64,
    coefficients: Vec<Scalar>,
}

impl CurveForm {
    pub fn new(
        field: FieldSpec,
        degree: i64,
        coefficients: Vec<Scalar>,
    ) -> Result<CurveForm, PointSchemeError> {
        if degree < 1 {
            return Err(PointSchemeError::DegreeTooSmall(degree));
        }
        let expected = monomial_count(degree);
        if coefficients.len() != expected {
            return Err(PointSchemeError::CoefficientCountMismatch {
                degree,
                expected,
                len: coefficients.len(),
            });
        }
        if coefficients.iter().any(|c| !field.owns(c)) {
            return Err(PointSchemeError::FieldMismatch);
        }
        if coefficients.iter().all(Scalar::is_zero) {
            return Err(PointSchemeError::ZeroForm);
        }
        Ok(CurveForm {
            field,
            degree,
            coefficients,
        })
    }

    pub fn from_ints(
        field: FieldSpec,
        degree: i64,
        coefficients: &[i64],
    ) -> Result<CurveForm, PointSchemeError> {
        CurveForm::new(
            field,
            degree,
            coefficients.iter().map(|&n| field.from_i64(n)).collect(),
        )
    }

    /// The line a·x + b·y + c·z = 0.
    pub fn line(field: FieldSpec, normal: [Scalar; 3]) -> Result<CurveForm, PointSchemeError> {
        CurveForm::new(field, 1, normal.to_vec())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coefficients
    }

    pub fn evaluate(&self, coords: &[Scalar; 3]) -> Scalar {
        let basis = monomial_basis(self.degree).expect("form degree is positive");
        let mut acc = self.field.zero();
        for (coef, expo) in self.coefficients.iter().zip(basis) {
            if !coef.is_zero() {
                acc = &acc + &(coef * &eval_monomial(coords, expo));
            }
        }
        acc
    }

    pub fn vanishes_at(&self, p: &ProjPoint) -> bool {
        self.evaluate(p.coords()).is_zero()
    }

    /// The three partial derivatives evaluated at a coordinate triple.
    pub fn gradient_at(&self, coords: &[Scalar; 3]) -> [Scalar; 3] {
        let basis = monomial_basis(self.degree).expect("form degree is positive");
        let mut grad = [self.field.zero(), self.field.zero(), self.field.zero()];
        for (coef, (i, j, k)) in self.coefficients.iter().zip(basis) {
            if coef.is_zero() {
                continue;
            }
            let exps = [i, j, k];
            for axis in 0..3 {
                if exps[axis] == 0 {
                    continue;
                }
                let mut lowered = exps;
                lowered[axis] -= 1;
                let mono = eval_monomial(coords, (lowered[0], lowered[1], lowered[2]));
                let term = &(coef * &self.field.from_i64(exps[axis] as i64)) * &mono;
                grad[axis] = &grad[axis] + &term;
            }
        }
        grad
    }

    /// Product of two forms (degrees add; coefficients convolve).
    pub fn multiply(&self, other: &CurveForm) -> CurveForm {
        assert_eq!(self.field, other.field, "mixed fields in form product");
        let degree = self.degree + other.degree;
        let mut coefficients = vec![self.field.zero(); monomial_count(degree)];
        let left = monomial_basis(self.degree).expect("form degree is positive");
        let right = monomial_basis(other.degree).expect("form degree is positive");
        for (a, ea) in self.coefficients.iter().zip(&left) {
            if a.is_zero() {
                continue;
            }
            for (b, eb) in other.coefficients.iter().zip(&right) {
                if b.is_zero() {
                    continue;
                }
                let expo = (ea.0 + eb.0, ea.1 + eb.1, ea.2 + eb.2);
                let slot = &mut coefficients[mono_index(degree, expo)];
                *slot = &*slot + &(a * b);
            }
        }
        CurveForm {
            field: self.field,
            degree,
            coefficients,
        }
    }
}

impl fmt::Display for CurveForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = monomial_basis(self.degree).expect("form degree is positive");
        let mut first = true;
        for (coef, (i, j, k)) in self.coefficients.iter().zip(basis) {
            if coef.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{coef}")?;
            for (var, exp) in [("x", i), ("y", j), ("z", k)] {
                match exp {
                    0 => {}
                    1 => write!(f, "*{var}")?,
                    _ => write!(f, "*{var}^{exp}")?,
                }
            }
        }
        Ok(())
    }
}
