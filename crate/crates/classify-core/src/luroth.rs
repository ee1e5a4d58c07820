//! The Lüroth semigroup LS(d) of a smooth plane curve of degree d: the set of
//! degrees of globally generated line bundles on the curve. Its complement in
//! the natural numbers is a finite union of intervals
//! `[(a-1)d+1, a(d-a)-1]` for `1 <= a <= floor(sqrt(d-2))`,
//! and is empty for d <= 2.

use crate::error::DomainError;
use crate::interval::IntervalList;

/// Largest degree accepted by [`luroth_gaps`]; beyond it the materialized
/// interval endpoints would overflow the list's 64-bit bounds.
/// Membership queries ([`luroth_contains`]) have no such limit.
pub const LUROTH_GAPS_MAX_DEGREE: i64 = 1 << 31;

/// Integer square root of a nonnegative value.
pub(crate) fn isqrt_i64(n: i64) -> i64 {
    debug_assert!(n >= 0);
    (n as u64).isqrt() as i64
}

pub(crate) fn isqrt_i128(n: i128) -> i128 {
    debug_assert!(n >= 0);
    (n as u128).isqrt() as i128
}

/// The complement of LS(d) in the natural numbers, as normalized intervals.
pub fn luroth_gaps(d: i64) -> Result<IntervalList, DomainError> {
    if d < 1 {
        return Err(DomainError::NonPositiveDegree(d));
    }
    if d > LUROTH_GAPS_MAX_DEGREE {
        return Err(DomainError::EnumerationTooLarge {
            c: d,
            limit: LUROTH_GAPS_MAX_DEGREE,
        });
    }
    if d <= 2 {
        return Ok(IntervalList::empty());
    }
    let n0 = isqrt_i64(d - 2);
    Ok(IntervalList::from_pairs(
        (1..=n0).map(|a| ((a - 1) * d + 1, a * (d - a) - 1)),
    ))
}

/// Whether `n` lies in LS(d). Negative `n` never does; this convention lets a
/// negative residual degree flow through the admissibility test unchanged.
pub fn luroth_contains(d: i64, n: i128) -> Result<bool, DomainError> {
    if d < 1 {
        return Err(DomainError::NonPositiveDegree(d));
    }
    if n < 0 {
        return Ok(false);
    }
    Ok(luroth_gap_at(d, n).is_none())
}

/// The gap interval of LS(d) containing `n`, as `(a, lo, hi)` with
/// `lo = (a-1)d+1` and `hi = a(d-a)-1`, or `None` when `n` is a member.
///
/// Constant-time: for n >= 1 the only candidate block index is
/// `a = (n-1) div d + 1`, because the gap for `a` lies inside
/// `[(a-1)d+1, ad]`.
pub(crate) fn luroth_gap_at(d: i64, n: i128) -> Option<(i64, i128, i128)> {
    debug_assert!(d >= 1);
    if n <= 0 || d <= 2 {
        return None;
    }
    let d = d as i128;
    let n0 = isqrt_i128(d - 2);
    let a = (n - 1) / d + 1;
    if a > n0 {
        return None;
    }
    let lo = (a - 1) * d + 1;
    let hi = a * (d - a) - 1;
    (lo <= n && n <= hi).then_some((a as i64, lo, hi))
}
