use crate::error::PointSchemeError;
use crate::points::PointSet;
use exact_linalg::{Matrix, Scalar};

/// Dimension of the space of plane forms of degree `n`: (n+1)(n+2)/2, and 0
/// for negative `n`.
pub fn monomial_count(n: i64) -> usize {
    if n < 0 {
        0
    } else {
        ((n + 1) * (n + 2) / 2) as usize
    }
}

/// Exponent triples (i,j,k) with i+j+k = n, ordered by decreasing i then
/// decreasing j. This order is fixed so coefficient vectors, kernels, and
/// reports are reproducible.
pub fn monomial_basis(n: i64) -> Result<Vec<(u32, u32, u32)>, PointSchemeError> {
    if n < 0 {
        return Err(PointSchemeError::NegativeDegree(n));
    }
    let n = n as u32;
    let mut basis = Vec::with_capacity(monomial_count(n as i64));
    for i in (0..=n).rev() {
        for j in (0..=n - i).rev() {
            basis.push((i, j, n - i - j));
        }
    }
    Ok(basis)
}

/// Position of (i,j,k) in `monomial_basis(n)`, in O(1).
pub fn mono_index(n: i64, expo: (u32, u32, u32)) -> usize {
    let (i, j, k) = expo;
    debug_assert_eq!(i as i64 + j as i64 + k as i64, n);
    let s = (n - i as i64) as usize; // block of monomials sharing this power of x
    s * (s + 1) / 2 + (s - j as usize)
}

/// Evaluate the monomial x^i y^j z^k at a coordinate triple.
pub(crate) fn eval_monomial(coords: &[Scalar; 3], expo: (u32, u32, u32)) -> Scalar {
    let x = coords[0].pow(expo.0);
    let y = coords[1].pow(expo.1);
    let z = coords[2].pow(expo.2);
    &(&x * &y) * &z
}

/// Rows = points of `z`, columns = degree-`n` monomials in basis order; the
/// rank of this matrix is the Hilbert function of the point set at `n`.
pub fn evaluation_matrix(z: &PointSet, n: i64) -> Result<Matrix, PointSchemeError> {
    let basis = monomial_basis(n)?;
    let mut entries = Vec::with_capacity(z.degree() * basis.len());
    for p in z.points() {
        for &expo in &basis {
            entries.push(eval_monomial(p.coords(), expo));
        }
    }
    Ok(Matrix::new(z.field(), z.degree(), basis.len(), entries)?)
}

/// Hilbert function H(Z, n): 0 for n < 0, otherwise the rank of the
/// evaluation matrix.
pub fn hilbert(z: &PointSet, n: i64) -> usize {
    if n < 0 {
        return 0;
    }
    evaluation_matrix(z, n)
        .expect("nonnegative degree")
        .rank()
}

/// Dimension of the degree-`n` curves through Z (h⁰ of the twisted ideal
/// sheaf): the corank of evaluation inside the full space of forms.
pub fn h0_ideal(z: &PointSet, n: i64) -> usize {
    if n < 0 {
        return 0;
    }
    monomial_count(n) - hilbert(z, n)
}

/// Failure of Z to impose independent conditions in degree n (h¹ of the
/// twisted ideal sheaf): deg Z − H(Z, n).
pub fn h1_ideal(z: &PointSet, n: i64) -> usize {
    z.degree() - hilbert(z, n)
}

/// Least degree n ≥ 1 of a curve containing Z. Terminates because forms of
/// degree deg Z always exist (a product of lines through the points).
pub fn sigma(z: &PointSet) -> Result<i64, PointSchemeError> {
    if z.is_empty() {
        return Err(PointSchemeError::EmptyPointSet);
    }
    let mut n = 1i64;
    loop {
        if h0_ideal(z, n) > 0 {
            return Ok(n);
        }
        assert!(n <= z.degree() as i64, "sigma exceeded the degree bound");
        n += 1;
    }
}

/// Basis of the degree-`n` forms vanishing on Z, as coefficient vectors in
/// monomial-basis order (the kernel of the evaluation matrix, in its
/// canonical reduced form).
pub fn ideal_basis(z: &PointSet, n: i64) -> Result<Vec<Vec<Scalar>>, PointSchemeError> {
    Ok(evaluation_matrix(z, n)?.kernel_basis())
}
