//! Exact integer classification of Chern pairs (c, y) of globally generated
//! rank-two vector bundles on the projective plane.
//!
//! The decision procedure combines five mechanisms:
//! split bundles (y = 0, y = c^2, or y = a(c-a)); window membership with an
//! admissible residual degree in a Lüroth semigroup; the stable range
//! `c^2/4 <= y <= 3c^2/4`; and the duality y <-> c^2 - y. Everything is
//! computed with exact integer arithmetic (128-bit internally); there is no
//! floating point in this crate.

mod classify;
mod error;
mod interval;
mod luroth;
mod numerics;
mod recipe;
mod window;

pub use classify::{
    classify, effective_set, g_dual, gap_set, gap_set_unclipped, is_admissible, Case, ChernPair,
    Classification, LurothGap, ENUMERATION_MAX_C,
};
pub use error::DomainError;
pub use interval::{Interval, IntervalList};
pub use luroth::{luroth_contains, luroth_gaps, LUROTH_GAPS_MAX_DEGREE};
pub use numerics::{
    bidegrees, euler_chi, le_potier_gg_moduli_nonempty, plane_genus, EMBEDDING_PAIRS,
};
pub use recipe::{existence_recipe, ExistenceRecipe, RecipePath};
pub use window::{split_parameter, window_bounds, window_t};
