//! Window decomposition of the sub-critical range `c-1 <= y < c^2/4`.
//!
//! For `2 <= t <= floor(c/2)` the closed window `W_t = [(t-1)(c-t+1), t(c-t)]`
//! tiles that range; consecutive windows overlap exactly in their shared
//! endpoint, and the endpoints are exactly the split products `a(c-a)`.

use crate::error::DomainError;
use crate::luroth::isqrt_i128;

/// Closed bounds of window `t`, without range validation.
pub fn window_bounds(c: i64, t: i64) -> (i128, i128) {
    let (c, t) = (c as i128, t as i128);
    ((t - 1) * (c - t + 1), t * (c - t))
}

/// Smallest integer `a >= 1` with `y = a(c-a)`, if `y` is such a product.
pub fn split_parameter(c: i64, y: i64) -> Option<i64> {
    let (ci, yi) = (c as i128, y as i128);
    if y < 0 || 4 * yi > ci * ci {
        return None;
    }
    let disc = ci * ci - 4 * yi;
    let s = isqrt_i128(disc);
    if s * s != disc || (ci - s) % 2 != 0 {
        return None;
    }
    let a = (ci - s) / 2;
    (a >= 1).then(|| a as i64)
}

/// Locates `y` in the window decomposition: the unique `t` whose closed
/// window contains `y`, preferring the smaller `t` when `y` is a shared
/// endpoint, together with the split parameter `a` when `y = a(c-a)`.
pub fn window_t(c: i64, y: i64) -> Result<(i64, Option<i64>), DomainError> {
    let (ci, yi) = (c as i128, y as i128);
    if c < 4 || yi < ci - 1 || 4 * yi >= ci * ci {
        return Err(DomainError::OutsideWindows { c, y });
    }
    // t(c-t) is strictly increasing for t <= c/2; find the smallest t
    // with y <= t(c-t). Window t's lower bound is window (t-1)'s upper
    // bound, so that t's window contains y.
    let (mut lo, mut hi) = (2i64, c / 2);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if (mid as i128) * (ci - mid as i128) >= yi {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let t = lo;
    let (wlo, whi) = window_bounds(c, t);
    debug_assert!(wlo <= yi && yi <= whi, "window search missed: c={c} y={y} t={t}");
    Ok((t, split_parameter(c, y)))
}
