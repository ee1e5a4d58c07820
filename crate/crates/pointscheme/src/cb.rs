use crate::curve::CurveForm;
use crate::hilbert::{h0_ideal, ideal_basis};
use crate::points::{PointSet, ProjPoint};
use serde::Serialize;

/// Result of the colength-one test in degree n: every curve of degree n
/// through all-but-one point must contain the missing point too.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CbOutcome {
    pub holds: bool,
    /// On failure: the omitted point and a degree-n curve through the rest
    /// of the set that misses it.
    pub witness: Option<(ProjPoint, CurveForm)>,
}

impl CbOutcome {
    fn holds() -> CbOutcome {
        CbOutcome {
            holds: true,
            witness: None,
        }
    }
}

/// Tests the colength-one condition for `z` in degree `n`.
///
/// Vacuously true for n ≤ 0 and for the empty set. Otherwise `z` passes iff
/// dropping any single point leaves the space of degree-n curves unchanged;
/// the first point (in set order) where the space grows yields the witness,
/// taken from the first canonical kernel vector not vanishing there.
/// Duplicate points cannot occur: `PointSet` construction rejects them.
pub fn is_cb(z: &PointSet, n: i64) -> CbOutcome {
    if n <= 0 || z.is_empty() {
        return CbOutcome::holds();
    }
    let h0_full = h0_ideal(z, n);
    for index in 0..z.degree() {
        let reduced = z.without_index(index);
        let h0_reduced = h0_ideal(&reduced, n);
        debug_assert!(h0_reduced >= h0_full && h0_reduced <= h0_full + 1);
        if h0_reduced > h0_full {
            let p = z.points()[index].clone();
            let curve = ideal_basis(&reduced, n)
                .expect("degree is positive")
                .into_iter()
                .find_map(|coeffs| {
                    let form = CurveForm::new(z.field(), n, coeffs)
                        .expect("kernel vectors are nonzero");
                    (!form.vanishes_at(&p)).then_some(form)
                })
                .expect("a larger curve space contains a form missing the point");
            return CbOutcome {
                holds: false,
                witness: Some((p, curve)),
            };
        }
    }
    CbOutcome::holds()
}
