//! Library half of the `chern` command-line tool: deterministic renderers
//! for classification verdicts, gap and bidegree tables, Lüroth intervals,
//! and point-set invariants, plus the seeded property-suite battery behind
//! `chern verify`.

pub mod render;
pub mod verify;

pub use render::{
    render_bidegrees, render_cb, render_character, render_classification, render_gaps, render_gg,
    render_hilbert, render_luroth, render_table, OutputFormat,
};
pub use verify::{render_report, run_verify, SuiteOutcome, VerifyConfig};
