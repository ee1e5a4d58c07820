//! Reduced zero-dimensional subschemes of the projective plane, over exact
//! fields: Hilbert functions and their numerical characters, colength-one
//! (Cayley–Bacharach) and global-generation testers, transverse
//! complete-intersection liaison, seeded instance generators, and checkers
//! that hunt for counterexamples to the theorems the classification engine
//! relies on.
//!
//! Everything is computed by exact linear algebra over F_p or Q; every
//! seeded operation is deterministic in its seed.

mod cb;
mod character;
mod checkers;
mod ci;
mod curve;
mod error;
mod gen;
mod gg;
mod hilbert;
mod io;
mod points;

pub use cb::{is_cb, CbOutcome};
pub use character::{numerical_character, NumericalCharacter};
pub use checkers::{
    check_character_gaps, check_residual_cb, check_window_gap, CharacterGapCheck,
    CharacterGapReport, ResidualCbReport, WindowGapReport,
};
pub use ci::{ci_residual, make_transverse_ci, TransverseCi};
pub use curve::CurveForm;
pub use error::PointSchemeError;
pub use gen::{gen_points, PointKind};
pub use gg::{is_gg, is_gg_seeded, GgReport, GgVerdict};
pub use hilbert::{
    evaluation_matrix, h0_ideal, h1_ideal, hilbert, ideal_basis, mono_index, monomial_basis,
    monomial_count, sigma,
};
pub use io::{load_point_set, save_point_set};
pub use points::{plane_points, PointSet, ProjPoint};
