//! Construction routes witnessing effectivity: which standard construction
//! produces a bundle with the given Chern pair.

use crate::classify::{classify, Case};
use serde::{Deserialize, Serialize};

/// How a bundle with the given pair is produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RecipePath {
    /// Direct sum of two line bundles O(a) + O(c-a).
    SplitBundle,
    /// Extension driven by a special line bundle (nonzero first cohomology)
    /// on the degree-(t-1) curve.
    SpecialLineBundle,
    /// Liaison construction: the section scheme is linked to a residual
    /// r-point scheme inside a complete intersection.
    LinkedFromR,
    /// Generic stable bundle in the nonempty moduli space.
    StableRange,
    /// Mirror of the wrapped recipe under y <-> c^2 - y.
    Dual(Box<ExistenceRecipe>),
}

/// A construction route for an effective pair. For window pairs, `t` is the
/// window index and `l` the residual line-bundle degree; split and stable
/// routes carry no window data and report `t = 0`, `l = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceRecipe {
    pub t: i64,
    pub l: i128,
    /// Residual point count (t-1)^2 - l on the liaison route.
    pub r: Option<i128>,
    pub path: RecipePath,
}

/// The construction route for (c, y), or `None` when the pair is a gap.
pub fn existence_recipe(c: i64, y: i64) -> Option<ExistenceRecipe> {
    let cls = classify(c, y);
    if !cls.effective {
        return None;
    }
    match cls.case {
        Case::Zero | Case::Full => Some(ExistenceRecipe {
            t: 0,
            l: 0,
            r: None,
            path: RecipePath::SplitBundle,
        }),
        Case::SplitBoundary => Some(ExistenceRecipe {
            t: cls.split_a.expect("split case carries its parameter"),
            l: 0,
            r: None,
            path: RecipePath::SplitBundle,
        }),
        Case::Stable => Some(ExistenceRecipe {
            t: 0,
            l: 0,
            r: None,
            path: RecipePath::StableRange,
        }),
        Case::Window1Admissible => {
            let t = cls.t.expect("window case carries t");
            let l = cls.l.expect("window case carries l");
            let ti = t as i128;
            // Liaison works when the residual degree is both large enough to
            // dominate the curve's genus bound and at most (t-2)^2.
            let liaison_lo = (ti - 2) * (ti - 3) / 2 + 1;
            let liaison_hi = (ti - 2) * (ti - 2);
            if liaison_lo <= l && l <= liaison_hi {
                let r = (ti - 1) * (ti - 1) - l;
                debug_assert!(1 <= r && r <= ti * (ti + 1) / 2 - 3);
                Some(ExistenceRecipe {
                    t,
                    l,
                    r: Some(r),
                    path: RecipePath::LinkedFromR,
                })
            } else {
                Some(ExistenceRecipe {
                    t,
                    l,
                    r: None,
                    path: RecipePath::SpecialLineBundle,
                })
            }
        }
        Case::Window3Dual => {
            let dual_y = cls.dual_y.expect("mirror case carries the dual class");
            let inner = existence_recipe(c, dual_y as i64)
                .expect("mirror of an effective pair is effective");
            Some(ExistenceRecipe {
                t: inner.t,
                l: inner.l,
                r: inner.r,
                path: RecipePath::Dual(Box::new(inner)),
            })
        }
        Case::Window1Gap | Case::BelowRange | Case::AboveRange => {
            unreachable!("gap cases return early")
        }
    }
}
