use crate::cb::{is_cb, CbOutcome};
use crate::character::{numerical_character, NumericalCharacter};
use crate::curve::CurveForm;
use crate::error::PointSchemeError;
use crate::gg::{is_gg, GgReport, GgVerdict};
use crate::hilbert::h0_ideal;
use crate::points::PointSet;
use serde::Serialize;

/// Liaison checker: inside a transverse intersection of type (a, b) split as
/// X = Y ⊔ Z, if the degree-a curves through Y generate its ideal then Z
/// must satisfy the colength-one condition in degree b − 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidualCbReport {
    pub a: i64,
    pub b: i64,
    /// Hypothesis: Y and Z share no point.
    pub disjoint: bool,
    /// Hypothesis: Y ⊔ Z really is the full intersection of F and G —
    /// degrees match, all points lie on both curves, and the count is a·b.
    pub union_is_ci: bool,
    /// Hypothesis on Y (skipped when Y is empty or has no degree-a curves).
    pub gg: Option<GgReport>,
    /// Whether the generation hypothesis is positively established
    /// (exhaustive verdict only; probabilistic clean runs do not count).
    pub gg_established: bool,
    /// Conclusion degree b − 3 and the test outcome there.
    pub cb_degree: i64,
    pub cb: CbOutcome,
    /// True when b ≤ 3 makes the conclusion hold vacuously.
    pub cb_vacuous: bool,
    /// All hypotheses established yet the conclusion failed. Must never be
    /// set: it would contradict a proved statement.
    pub violation: bool,
}

pub fn check_residual_cb(
    y: &PointSet,
    z: &PointSet,
    a: i64,
    b: i64,
    f: &CurveForm,
    g: &CurveForm,
) -> ResidualCbReport {
    let disjoint = y.points().iter().all(|p| !z.contains(p));
    let degrees_match = f.degree() == a && g.degree() == b;
    let on_both = |set: &PointSet| {
        set.points()
            .iter()
            .all(|p| f.vanishes_at(p) && g.vanishes_at(p))
    };
    let union_is_ci = degrees_match
        && on_both(y)
        && on_both(z)
        && disjoint
        && (y.degree() + z.degree()) as i64 == a * b;

    let gg = (!y.is_empty() && a >= 1 && h0_ideal(y, a) > 0)
        .then(|| is_gg(y, a))
        .transpose()
        .ok()
        .flatten();
    let gg_established = gg
        .as_ref()
        .is_some_and(|r| r.verdict == GgVerdict::Generated);

    let cb_degree = b - 3;
    let cb = is_cb(z, cb_degree);
    let cb_vacuous = cb_degree <= 0;

    ResidualCbReport {
        a,
        b,
        disjoint,
        union_is_ci,
        gg,
        gg_established,
        cb_degree,
        cb_vacuous,
        violation: disjoint && union_is_ci && gg_established && !cb.holds,
        cb,
    }
}

/// Window checker: a set lying on a degree-d curve but on none of degree
/// a − 1, with d ≥ a² + 2 and degree strictly inside
/// [(a−1)d + 1, a(d−a) − 1], must fail the colength-one condition in degree
/// d − 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowGapReport {
    pub d: i64,
    pub a: i64,
    pub degree: usize,
    /// Hypothesis: d ≥ a² + 2.
    pub degree_bound_ok: bool,
    /// Hypothesis: no curve of degree a − 1 contains the set.
    pub no_small_curve: bool,
    /// Hypothesis: (a−1)d + 1 ≤ deg Z ≤ a(d−a) − 1.
    pub degree_in_window: bool,
    /// Hypothesis: some degree-d curve contains the set.
    pub on_degree_d_curve: bool,
    /// The conclusion is testable only when d − 3 ≥ 1.
    pub conclusion_testable: bool,
    pub cb: CbOutcome,
    pub violation: bool,
}

pub fn check_window_gap(z: &PointSet, d: i64, a: i64) -> WindowGapReport {
    let degree = z.degree();
    let degree_bound_ok = d >= a * a + 2;
    let no_small_curve = h0_ideal(z, a - 1) == 0;
    let lo = (a - 1) * d + 1;
    let hi = a * (d - a) - 1;
    let degree_in_window = lo <= degree as i64 && degree as i64 <= hi;
    let on_degree_d_curve = h0_ideal(z, d) > 0;
    let conclusion_testable = d - 3 >= 1;
    let cb = is_cb(z, d - 3);
    let hypotheses =
        degree_bound_ok && no_small_curve && degree_in_window && on_degree_d_curve;
    WindowGapReport {
        d,
        a,
        degree,
        degree_bound_ok,
        no_small_curve,
        degree_in_window,
        on_degree_d_curve,
        conclusion_testable,
        violation: hypotheses && conclusion_testable && cb.holds,
        cb,
    }
}

/// Character checker: every disconnection of the numerical character at
/// index r forces the colength-one condition to fail in degree n_r − 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterGapCheck {
    /// Index with n_{r−1} > n_r + 1.
    pub r: usize,
    /// The tested degree n_r − 1 (always ≥ 1: a disconnection forces
    /// n_r ≥ σ ≥ 2).
    pub cb_degree: i64,
    pub cb: CbOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterGapReport {
    pub character: NumericalCharacter,
    pub checks: Vec<CharacterGapCheck>,
    pub violation: bool,
}

pub fn check_character_gaps(z: &PointSet) -> Result<CharacterGapReport, PointSchemeError> {
    let character = numerical_character(z)?;
    let entries = character.entries().to_vec();
    let mut checks = Vec::new();
    for r in character.gap_indices() {
        let cb_degree = entries[r] - 1;
        debug_assert!(cb_degree >= 1);
        checks.push(CharacterGapCheck {
            r,
            cb_degree,
            cb: is_cb(z, cb_degree),
        });
    }
    let violation = checks.iter().any(|c| c.cb.holds);
    Ok(CharacterGapReport {
        character,
        checks,
        violation,
    })
}
