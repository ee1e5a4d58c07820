//! Euler characteristic, the moduli-space nonemptiness criterion for
//! globally generated stable bundles, bidegrees, and the plane-curve genus
//! formula.

use crate::classify::effective_set;
use crate::error::DomainError;

/// Euler characteristic of a rank-two bundle on the plane with the given
/// Chern classes: `2 + c1(c1+3)/2 - c2`.
pub fn euler_chi(c1: i64, c2: i64) -> i128 {
    let (c1, c2) = (c1 as i128, c2 as i128);
    2 + c1 * (c1 + 3) / 2 - c2
}

/// Whether the moduli space of stable rank-two bundles with these Chern
/// classes is nonempty AND its generic member is globally generated:
/// requires negative non-(-4) discriminant, and either positive c1 with
/// Euler characteristic at least 4 or one of the two exceptional pairs
/// (1,1), (2,4).
pub fn le_potier_gg_moduli_nonempty(c1: i64, c2: i64) -> bool {
    let disc = (c1 as i128) * (c1 as i128) - 4 * (c2 as i128);
    let stable = disc < 0 && disc != -4;
    stable && ((c1 > 0 && euler_chi(c1, c2) >= 4) || matches!((c1, c2), (1, 1) | (2, 4)))
}

/// The (c, y) pairs for which the induced map to the Grassmannian of lines
/// is an embedding.
pub const EMBEDDING_PAIRS: [(i64, i64); 4] = [(1, 0), (1, 1), (2, 1), (2, 3)];

/// Bidegrees `(y, c^2 - y)` of all effective pairs for a given c, ordered
/// by y.
pub fn bidegrees(c: i64) -> Result<Vec<(i64, i64)>, DomainError> {
    if c < 1 {
        return Err(DomainError::CTooSmall { c, min: 1 });
    }
    let sq = c * c;
    Ok(effective_set(c)?.into_iter().map(|y| (y, sq - y)).collect())
}

/// Genus of a smooth plane curve of degree d: `(d-1)(d-2)/2`.
pub fn plane_genus(d: i64) -> Result<i128, DomainError> {
    if d < 1 {
        return Err(DomainError::NonPositiveDegree(d));
    }
    let d = d as i128;
    Ok((d - 1) * (d - 2) / 2)
}
