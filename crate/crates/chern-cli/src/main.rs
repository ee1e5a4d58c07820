//! `chern`: exact decisions about Chern pairs of globally generated
//! rank-two bundles on the projective plane, plus point-scheme invariants
//! and a deterministic verification battery.
//!
//! Exit codes: 0 for a computed answer (whatever the verdict), 1 for
//! verification failures, 2 for usage or domain errors.

use chern_cli::{
    render_bidegrees, render_cb, render_character, render_classification, render_gaps, render_gg,
    render_hilbert, render_luroth, render_report, render_table, run_verify, OutputFormat,
    VerifyConfig,
};
use clap::{Parser, Subcommand};
use exact_linalg::{is_prime_u64, FieldSpec};
use pointscheme::{is_cb, is_gg_seeded, load_point_set, numerical_character, PointSet};
use std::path::{Path, PathBuf};

/// Sweep commands and the verifier cap the first Chern class here; the
/// quadratic tables get unwieldy beyond it.
const MAX_SWEEP_C: i64 = 500;
/// Exhaustive base-point scans visit p^2 + p + 1 rational points; larger
/// primes would make `points gg` and the liaison suites crawl.
const MAX_SCAN_PRIME: u64 = 1009;
/// Ceiling for `points` degrees; evaluation matrices grow quadratically.
const MAX_POINTS_DEGREE: i64 = 100;
/// Global generation additionally scans sections at every plane point.
const MAX_GG_DEGREE: i64 = 12;

#[derive(Parser)]
#[command(
    name = "chern",
    version,
    about = "Exact classification of Chern pairs on the projective plane",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the pair (c, y) arises from a globally generated bundle
    Classify {
        c: i64,
        y: i64,
        /// Append the deciding case and its window data to the verdict
        #[arg(long)]
        explain: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Print the verdict for every y from 0 to c^2
    Table {
        c: i64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: OutputFormat,
    },
    /// List the window gaps of c, each with its mirror image c^2 - y
    Gaps { c: i64 },
    /// Print the gap intervals of the degree-d Lüroth semigroup
    Luroth { d: i64 },
    /// List the bidegrees (y, c^2 - y) of effective pairs, marking embeddings
    Bidegrees { c: i64 },
    /// Invariants of a point-set file
    Points {
        #[command(subcommand)]
        cmd: PointsCmd,
    },
    /// Run the full property-suite battery
    Verify {
        /// Master seed for every generated instance
        #[arg(long, env = "CHERN_SEED", default_value_t = 0)]
        seed: u64,
        /// Largest first Chern class in the sweep suites (at most 500)
        #[arg(long, env = "CHERN_MAX_C", default_value_t = 100)]
        max_c: i64,
        /// Instance multiplier for the seeded point-scheme suites
        #[arg(long, env = "CHERN_TRIALS", default_value_t = 10)]
        trials: u32,
        /// Prime field for generated point schemes (an odd prime, at most 1009)
        #[arg(long, env = "CHERN_PRIME", default_value_t = 101)]
        prime: u64,
    },
}

#[derive(Subcommand)]
enum PointsCmd {
    /// Hilbert function values (columns: n, hilbert, h0, h1)
    Hilbert {
        file: PathBuf,
        /// Single degree to evaluate; omitted, the table runs to saturation
        #[arg(long)]
        degree: Option<i64>,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Numerical character of the set
    Character {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Colength-one (Cayley-Bacharach) test in the given degree
    Cb {
        file: PathBuf,
        #[arg(long)]
        degree: i64,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Global generation of the degree-n curves through the set
    Gg {
        file: PathBuf,
        #[arg(long)]
        degree: i64,
        /// Seed for the bounded rational probing stage
        #[arg(long, env = "CHERN_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Classify {
            c,
            y,
            explain,
            format,
        } => {
            print!(
                "{}",
                render_classification(&classify_core::classify(c, y), explain, format)
            );
            Ok(0)
        }
        Command::Table { c, format } => {
            if !(0..=MAX_SWEEP_C).contains(&c) {
                return Err(format!("table expects 0 <= c <= {MAX_SWEEP_C}, got {c}"));
            }
            print!("{}", render_table(c, format));
            Ok(0)
        }
        Command::Gaps { c } => {
            print!("{}", render_gaps(c).map_err(|e| e.to_string())?);
            Ok(0)
        }
        Command::Luroth { d } => {
            print!("{}", render_luroth(d).map_err(|e| e.to_string())?);
            Ok(0)
        }
        Command::Bidegrees { c } => {
            if c > MAX_SWEEP_C {
                return Err(format!("bidegrees expects c <= {MAX_SWEEP_C}, got {c}"));
            }
            print!("{}", render_bidegrees(c).map_err(|e| e.to_string())?);
            Ok(0)
        }
        Command::Points { cmd } => points_cmd(cmd),
        Command::Verify {
            seed,
            max_c,
            trials,
            prime,
        } => {
            if !(0..=MAX_SWEEP_C).contains(&max_c) {
                return Err(format!("--max-c must lie in 0..={MAX_SWEEP_C}, got {max_c}"));
            }
            if trials == 0 || trials > 1000 {
                return Err(format!("--trials must lie in 1..=1000, got {trials}"));
            }
            if !is_prime_u64(prime) || prime < 5 || prime > MAX_SCAN_PRIME {
                return Err(format!(
                    "--prime must be an odd prime between 5 and {MAX_SCAN_PRIME}, got {prime}"
                ));
            }
            let cfg = VerifyConfig {
                seed,
                max_c,
                trials,
                prime,
            };
            let suites = run_verify(&cfg)?;
            let (text, ok) = render_report(&suites);
            print!("{text}");
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn points_cmd(cmd: PointsCmd) -> Result<i32, String> {
    match cmd {
        PointsCmd::Hilbert {
            file,
            degree,
            format,
        } => {
            let z = load(&file)?;
            if let Some(n) = degree {
                check_degree(n)?;
            } else if z.degree() as i64 > MAX_POINTS_DEGREE {
                return Err(format!(
                    "the full table needs at most {MAX_POINTS_DEGREE} points; pass --degree"
                ));
            }
            print!("{}", render_hilbert(&z, degree, format));
            Ok(0)
        }
        PointsCmd::Character { file, format } => {
            let z = load(&file)?;
            let ch = numerical_character(&z).map_err(|e| e.to_string())?;
            print!("{}", render_character(&ch, format));
            Ok(0)
        }
        PointsCmd::Cb {
            file,
            degree,
            format,
        } => {
            check_degree(degree)?;
            let z = load(&file)?;
            print!("{}", render_cb(degree, &is_cb(&z, degree), format));
            Ok(0)
        }
        PointsCmd::Gg {
            file,
            degree,
            seed,
            format,
        } => {
            if !(1..=MAX_GG_DEGREE).contains(&degree) {
                return Err(format!(
                    "gg expects a degree in 1..={MAX_GG_DEGREE}, got {degree}"
                ));
            }
            let z = load(&file)?;
            if let FieldSpec::Prime(p) = z.field() {
                if p > MAX_SCAN_PRIME {
                    return Err(format!(
                        "the exhaustive base-point scan needs a prime at most {MAX_SCAN_PRIME}, got {p}"
                    ));
                }
            }
            let report = is_gg_seeded(&z, degree, seed, 200).map_err(|e| e.to_string())?;
            print!("{}", render_gg(&report, format));
            Ok(0)
        }
    }
}

fn check_degree(n: i64) -> Result<(), String> {
    if (-MAX_POINTS_DEGREE..=MAX_POINTS_DEGREE).contains(&n) {
        Ok(())
    } else {
        Err(format!(
            "degree must lie in -{MAX_POINTS_DEGREE}..={MAX_POINTS_DEGREE}, got {n}"
        ))
    }
}

fn load(path: &Path) -> Result<PointSet, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    load_point_set(&text).map_err(|e| e.to_string())
}
