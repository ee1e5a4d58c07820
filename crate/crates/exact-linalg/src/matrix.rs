use crate::error::LinalgError;
use crate::field::FieldSpec;
use crate::scalar::{scaled_to_bigint, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

/// A dense row-major matrix over a single exact field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix, validating shape and field homogeneity.
    pub fn new(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        entries: Vec<Scalar>,
    ) -> Result<Matrix, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch {
                rows,
                cols,
                len: entries.len(),
            });
        }
        if let Some(pos) = entries.iter().position(|s| !field.owns(s)) {
            return Err(LinalgError::MixedField { position: pos });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(LinalgError::RaggedRows);
        }
        Matrix::new(field, nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Rank over the matrix's field. Rational matrices are cleared to
    /// integers row by row and eliminated fraction-free, so no intermediate
    /// value is ever rounded or left unreduced.
    pub fn rank(&self) -> usize {
        match self.field {
            FieldSpec::Prime(p) => rank_mod_p(self, p),
            FieldSpec::Rational => rank_fraction_free(self),
        }
    }

    /// A basis of the right null space, one vector per non-pivot column of
    /// the reduced echelon form, ordered by that column and normalized so
    /// the first nonzero entry is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rref.at(i, free);
            }
            normalize_leading_one(&mut v);
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for col in 0..m.cols {
            if pr == m.rows {
                break;
            }
            let Some(found) = (pr..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pr, found);
            let inv = m.at(pr, col).inv();
            for c in col..m.cols {
                *m.at_mut(pr, c) = &inv * m.at(pr, c);
            }
            for r in 0..m.rows {
                if r != pr && !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone();
                    for c in col..m.cols {
                        *m.at_mut(r, c) = &*m.at(r, c) - &(&f * m.at(pr, c));
                    }
                }
            }
            pivots.push(col);
            pr += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

fn normalize_leading_one(v: &mut [Scalar]) {
    if let Some(first) = v.iter().position(|s| !s.is_zero()) {
        let inv = v[first].inv();
        for s in v.iter_mut() {
            *s = &inv * &*s;
        }
    }
}

/// Gaussian elimination in F_p, destroying a residue copy of the matrix.
fn rank_mod_p(m: &Matrix, p: u64) -> usize {
    let mut a: Vec<u64> = m
        .entries
        .iter()
        .map(|s| s.as_residue().expect("field validated at construction"))
        .collect();
    let (rows, cols) = (m.rows, m.cols);
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(found) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if found != rank {
            for c in 0..cols {
                a.swap(rank * cols + c, found * cols + c);
            }
        }
        let pivot = a[rank * cols + col];
        let inv = mod_inv(pivot, p);
        for r in (rank + 1)..rows {
            let lead = a[r * cols + col];
            if lead == 0 {
                continue;
            }
            let f = mulmod(lead, inv, p);
            for c in col..cols {
                let sub = mulmod(f, a[rank * cols + c], p);
                a[r * cols + c] = (a[r * cols + c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Fraction-free elimination for rational matrices: each row is scaled by
/// its denominators' lcm (rank-invariant), then a two-step determinant
/// recurrence keeps every intermediate entry an exact integer minor.
fn rank_fraction_free(m: &Matrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| {
            let lcm = m.row(r).iter().fold(BigInt::one(), |acc, s| {
                let den = s.as_rational().expect("field validated at construction").denom();
                acc.lcm(den)
            });
            m.row(r)
                .iter()
                .map(|s| scaled_to_bigint(s.as_rational().unwrap(), &lcm))
                .collect()
        })
        .collect();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(found) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, found);
        for r in (rank + 1)..rows {
            for c in (col + 1)..cols {
                let num = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "fraction-free division must be exact");
                a[r][c] = q;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qmat(rows: Vec<Vec<i64>>) -> Matrix {
        let q = FieldSpec::rational();
        Matrix::from_rows(
            q,
            rows.into_iter()
                .map(|r| r.into_iter().map(|n| q.from_i64(n)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn pmat(p: u64, rows: Vec<Vec<i64>>) -> Matrix {
        let f = FieldSpec::prime(p).unwrap();
        Matrix::from_rows(
            f,
            rows.into_iter()
                .map(|r| r.into_iter().map(|n| f.from_i64(n)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn construction_validates_shape_and_field() {
        let q = FieldSpec::rational();
        let f = FieldSpec::prime(7).unwrap();
        assert!(matches!(
            Matrix::new(q, 2, 2, vec![q.zero(); 3]),
            Err(LinalgError::ShapeMismatch { .. })
        ));
        assert!(matches!(
            Matrix::new(q, 1, 2, vec![q.zero(), f.zero()]),
            Err(LinalgError::MixedField { position: 1 })
        ));
        assert!(matches!(
            Matrix::new(FieldSpec::Prime(7), 1, 2, vec![f.zero(), FieldSpec::Prime(11).zero()]),
            Err(LinalgError::MixedField { position: 1 })
        ));
    }

    #[test]
    fn identity_and_zero_ranks() {
        for field in [FieldSpec::rational(), FieldSpec::prime(101).unwrap()] {
            assert_eq!(Matrix::identity(field, 3).rank(), 3);
            assert_eq!(Matrix::zero(field, 2, 5).rank(), 0);
            assert_eq!(Matrix::zero(field, 0, 4).rank(), 0);
        }
    }

    #[test]
    fn vandermonde_rows_have_full_rank() {
        // Rows (1, x, x^2, x^3) at 4 distinct values.
        let rows: Vec<Vec<i64>> = [2i64, 3, 5, 7]
            .iter()
            .map(|&x| vec![1, x, x * x, x * x * x])
            .collect();
        assert_eq!(qmat(rows.clone()).rank(), 4);
        assert_eq!(pmat(101, rows).rank(), 4);
    }

    #[test]
    fn rank_sees_through_scaling_denominators() {
        let q = FieldSpec::rational();
        let half = q.parse_scalar("1/2").unwrap();
        let third = q.parse_scalar("1/3").unwrap();
        let row2: Vec<Scalar> = vec![&half + &half, &third + &third]; // [1, 2/3]
        let m = Matrix::from_rows(
            q,
            vec![vec![q.from_i64(3), q.from_i64(2)], row2],
        )
        .unwrap();
        // Row 2 = (1/3) * row 1: rank 1.
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        for field in [FieldSpec::rational(), FieldSpec::prime(101).unwrap()] {
            assert!(Matrix::identity(field, 4).kernel_basis().is_empty());
        }
    }

    #[test]
    fn kernel_of_zero_row_is_standard_basis() {
        let m = Matrix::zero(FieldSpec::rational(), 1, 3);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            assert_eq!(v.iter().position(|s| !s.is_zero()), Some(i));
            assert_eq!(v[i], m.field().one());
        }
    }

    #[test]
    fn kernel_vectors_annihilate_matrix() {
        let m = qmat(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
            let first = v.iter().find(|s| !s.is_zero()).unwrap();
            assert_eq!(first, &m.field().one());
        }
    }

    #[test]
    fn empty_matrix_kernel_spans_everything() {
        let m = Matrix::zero(FieldSpec::prime(7).unwrap(), 0, 3);
        assert_eq!(m.kernel_basis().len(), 3);
        let m = Matrix::zero(FieldSpec::rational(), 3, 0);
        assert!(m.kernel_basis().is_empty());
    }
}
