//! The classification decision procedure: which pairs (c, y) arise as the
//! Chern classes of a globally generated rank-two vector bundle on the
//! projective plane.
//!
//! A pair is effective exactly when one of the following holds:
//! y = 0; y = c^2; y = a(c-a) for some integer a (a split bundle);
//! `c-1 <= y < c^2/4` with admissible residual degree (a window point whose
//! residual `c(t-1) - y` lies in the Lüroth semigroup LS(t-1));
//! `c^2/4 <= y <= 3c^2/4` (the stable range); or the mirror of a window
//! point under the duality `y <-> c^2 - y`.

use crate::error::DomainError;
use crate::interval::IntervalList;
use crate::luroth::{isqrt_i64, luroth_contains, luroth_gap_at};
use crate::window::{split_parameter, window_bounds, window_t};
use serde::{Deserialize, Serialize};

/// A candidate pair: first and second Chern class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChernPair {
    pub c: i64,
    pub y: i64,
}

impl ChernPair {
    pub fn new(c: i64, y: i64) -> Self {
        ChernPair { c, y }
    }
}

/// Which branch of the decision procedure settled the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    /// y = 0: the split bundle O + O(c).
    Zero,
    /// y = c^2: the mirror of y = 0.
    Full,
    /// c < 0, y < 0, or 0 < y < c-1: no bundle exists.
    BelowRange,
    /// y > c^2 or c^2-c+1 < y < c^2: no bundle exists.
    AboveRange,
    /// y = a(c-a): the split bundle O(a) + O(c-a).
    SplitBoundary,
    /// Window point with residual degree in LS(t-1).
    Window1Admissible,
    /// Window point whose residual degree is excluded from LS(t-1).
    Window1Gap,
    /// c^2/4 <= y <= 3c^2/4.
    Stable,
    /// 3c^2/4 < y < c^2: decided by the dual pair (c, c^2-y).
    Window3Dual,
}

/// The gap block of a Lüroth semigroup that excludes a residual degree:
/// block index `a` with bounds `[(a-1)d+1, a(d-a)-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LurothGap {
    pub a: i64,
    pub lo: i128,
    pub hi: i128,
}

/// Full verdict with its structured explanation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub pair: ChernPair,
    pub effective: bool,
    pub case: Case,
    /// Window index, when the pair (or its dual) lands in a window.
    pub t: Option<i64>,
    /// Split parameter when y = a(c-a).
    pub split_a: Option<i64>,
    /// Residual degree c(t-1) - y of the window containing y (or its dual).
    pub l: Option<i128>,
    /// The Lüroth gap block excluding the residual degree, when one does.
    pub luroth_gap: Option<LurothGap>,
    /// The mirror class c^2 - y, when the verdict came from the dual pair.
    pub dual_y: Option<i128>,
}

impl Classification {
    fn bare(pair: ChernPair, effective: bool, case: Case) -> Self {
        Classification {
            pair,
            effective,
            case,
            t: None,
            split_a: None,
            l: None,
            luroth_gap: None,
            dual_y: None,
        }
    }
}

/// Decides effectivity for any integer pair. Total: invalid ranges come back
/// as gap verdicts, never errors. All arithmetic is exact (128-bit
/// internally); no floating point is involved.
pub fn classify(c: i64, y: i64) -> Classification {
    classify_inner(c, y, false)
}

fn classify_inner(c: i64, y: i64, in_dual: bool) -> Classification {
    let pair = ChernPair::new(c, y);
    let (ci, yi) = (c as i128, y as i128);
    if c < 0 || y < 0 {
        return Classification::bare(pair, false, Case::BelowRange);
    }
    let sq = ci * ci;
    if yi > sq {
        return Classification::bare(pair, false, Case::AboveRange);
    }
    if y == 0 {
        return Classification::bare(pair, true, Case::Zero);
    }
    if yi == sq {
        return Classification::bare(pair, true, Case::Full);
    }
    if yi < ci - 1 {
        return Classification::bare(pair, false, Case::BelowRange);
    }
    if yi > sq - ci + 1 {
        return Classification::bare(pair, false, Case::AboveRange);
    }
    // Quarter boundaries without overflow: ceil(c^2/4) and floor(3c^2/4).
    let quarter_up = (sq + 3) / 4;
    let three_quarters_down = sq - quarter_up;
    if yi < quarter_up {
        return classify_window(pair, c, y);
    }
    if yi <= three_quarters_down {
        return Classification::bare(pair, true, Case::Stable);
    }
    // Mirror range: decide via the dual pair, which lands at or below the
    // quarter boundary, so the recursion bottoms out immediately.
    assert!(!in_dual, "dual of a mirror-range pair must leave the mirror range");
    let dual_y = sq - yi;
    let dual = classify_inner(c, dual_y as i64, true);
    debug_assert!(!matches!(dual.case, Case::Window3Dual));
    Classification {
        pair,
        effective: dual.effective,
        case: Case::Window3Dual,
        t: dual.t,
        split_a: dual.split_a,
        l: dual.l,
        luroth_gap: dual.luroth_gap,
        dual_y: Some(dual_y),
    }
}

/// Case `c-1 <= y < c^2/4`: split boundary or window membership.
fn classify_window(pair: ChernPair, c: i64, y: i64) -> Classification {
    if let Some(a) = split_parameter(c, y) {
        let t = if c >= 4 {
            Some(window_t(c, y).expect("split boundary lies in a window").0)
        } else {
            None
        };
        return Classification {
            t,
            split_a: Some(a),
            ..Classification::bare(pair, true, Case::SplitBoundary)
        };
    }
    // A non-split value below c^2/4 forces c >= 4: for c <= 3 every integer
    // in [c-1, c^2/4) is a product a(c-a).
    let (t, boundary) = window_t(c, y).expect("subcritical non-split value lies in a window");
    debug_assert!(boundary.is_none());
    let d = t - 1;
    let l = (c as i128) * (d as i128) - (y as i128);
    let admissible = luroth_contains(d, l).expect("window index is at least 2");
    let luroth_gap = if admissible {
        None
    } else {
        luroth_gap_at(d, l).map(|(a, lo, hi)| LurothGap { a, lo, hi })
    };
    Classification {
        pair,
        effective: admissible,
        case: if admissible {
            Case::Window1Admissible
        } else {
            Case::Window1Gap
        },
        t: Some(t),
        split_a: None,
        l: Some(l),
        luroth_gap,
        dual_y: None,
    }
}

/// Whether the residual degree of `y` strictly inside window `t` lies in
/// LS(t-1).
pub fn is_admissible(c: i64, t: i64, y: i64) -> Result<bool, DomainError> {
    if !(2 <= t && t <= c / 2) {
        return Err(DomainError::NotInWindowInterior { c, t, y });
    }
    let (lo, hi) = window_bounds(c, t);
    let yi = y as i128;
    if !(lo < yi && yi < hi) {
        return Err(DomainError::NotInWindowInterior { c, t, y });
    }
    luroth_contains(t - 1, (c as i128) * ((t - 1) as i128) - yi)
}

/// The mirror pair (c, c^2 - y).
pub fn g_dual(c: i64, y: i64) -> Result<ChernPair, DomainError> {
    let dual = (c as i128) * (c as i128) - (y as i128);
    match i64::try_from(dual) {
        Ok(dy) => Ok(ChernPair::new(c, dy)),
        Err(_) => Err(DomainError::OutOfRepresentableRange { c, y }),
    }
}

/// Largest `c` accepted by the enumerating operations (`gap_set`,
/// `effective_set`, `bidegrees`): they materialize O(c) intervals or O(c^2)
/// values, so unbounded inputs would exhaust memory.
pub const ENUMERATION_MAX_C: i64 = 2048;

fn check_enumeration_range(c: i64, min: i64) -> Result<(), DomainError> {
    if c < min {
        return Err(DomainError::CTooSmall { c, min });
    }
    if c > ENUMERATION_MAX_C {
        return Err(DomainError::EnumerationTooLarge {
            c,
            limit: ENUMERATION_MAX_C,
        });
    }
    Ok(())
}

/// All non-admissible y in the window range `c-1 < y < c^2/4`, as intervals:
/// the union over windows of the excluded blocks, clipped to each window's
/// open interior. Empty for c <= 5.
pub fn gap_set(c: i64) -> Result<IntervalList, DomainError> {
    check_enumeration_range(c, 1)?;
    let ci = c as i128;
    let mut pairs: Vec<(i64, i64)> = Vec::new();
    let mut push_clipped = |lo: i128, hi: i128, ilo: i128, ihi: i128| {
        let (lo, hi) = (lo.max(ilo), hi.min(ihi));
        if lo <= hi {
            pairs.push((lo as i64, hi as i64));
        }
    };
    for t in 2..=c / 2 {
        let (wlo, whi) = window_bounds(c, t);
        let (ilo, ihi) = (wlo + 1, whi - 1);
        let ti = t as i128;
        // Block 0: residual degree negative, y in [c(t-1)+1, t(c-t)-1].
        push_clipped(ci * (ti - 1) + 1, ti * (ci - ti) - 1, ilo, ihi);
        // Blocks a >= 1 mirror the Lüroth gaps of LS(t-1).
        if t >= 4 {
            for a in 1..=isqrt_i64(t - 3) {
                let ai = a as i128;
                push_clipped(
                    (ti - 1) * (ci - ai) + ai * ai + 1,
                    (ti - 1) * (ci - ai + 1) - 1,
                    ilo,
                    ihi,
                );
            }
        }
    }
    Ok(IntervalList::from_pairs(pairs))
}

/// The literal (unclipped) union of the excluded blocks over all windows —
/// diagnostics only. It can spill outside the window that defines each
/// block and then disagrees with the verdicts of `classify`; `gap_set` is
/// the authoritative list.
pub fn gap_set_unclipped(c: i64) -> Result<IntervalList, DomainError> {
    check_enumeration_range(c, 1)?;
    let ci = c as i128;
    let mut pairs: Vec<(i64, i64)> = Vec::new();
    for t in 2..=c / 2 {
        let ti = t as i128;
        let mut push = |lo: i128, hi: i128| {
            if lo <= hi {
                pairs.push((lo as i64, hi as i64));
            }
        };
        push(ci * (ti - 1) + 1, ti * (ci - ti) - 1);
        if t >= 4 {
            for a in 1..=isqrt_i64(t - 3) {
                let ai = a as i128;
                push((ti - 1) * (ci - ai) + ai * ai + 1, (ti - 1) * (ci - ai + 1) - 1);
            }
        }
    }
    Ok(IntervalList::from_pairs(pairs))
}

/// All effective y for a given c, in increasing order.
pub fn effective_set(c: i64) -> Result<Vec<i64>, DomainError> {
    check_enumeration_range(c, 0)?;
    let sq = c * c;
    Ok((0..=sq).filter(|&y| classify(c, y).effective).collect())
}
