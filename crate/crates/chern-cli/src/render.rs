//! Text renderers for every command: plain verdict lines, tab-separated
//! tables, and compact JSON. All output is deterministic in the inputs.

use classify_core::{
    bidegrees, classify, gap_set, luroth_gaps, Classification, DomainError, EMBEDDING_PAIRS,
};
use clap::ValueEnum;
use pointscheme::{
    h0_ideal, h1_ideal, hilbert, CbOutcome, GgReport, GgVerdict, NumericalCharacter, PointSet,
};
use serde_json::json;
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Human-oriented verdict lines.
    Plain,
    /// Tab-separated rows with a header line.
    Tsv,
    /// One compact JSON document.
    Json,
}

fn verdict_word(effective: bool) -> &'static str {
    if effective {
        "effective"
    } else {
        "gap"
    }
}

/// The structured explanation, rendered as ` key=value` tokens in a fixed
/// order; only fields the decision actually used appear.
fn explain_suffix(cls: &Classification) -> String {
    let mut s = format!(" case={:?}", cls.case);
    if let Some(t) = cls.t {
        write!(s, " t={t}").unwrap();
    }
    if let Some(a) = cls.split_a {
        write!(s, " a={a}").unwrap();
    }
    if let Some(l) = cls.l {
        write!(s, " l={l}").unwrap();
    }
    if let Some(g) = cls.luroth_gap {
        write!(s, " excluded=[{},{}] block={}", g.lo, g.hi, g.a).unwrap();
    }
    if let Some(d) = cls.dual_y {
        write!(s, " dual_y={d}").unwrap();
    }
    s
}

const TABLE_HEADER: &str = "y\tstatus\tcase\tt\ta\tl";

fn tsv_row(cls: &Classification) -> String {
    let opt = |v: Option<String>| v.unwrap_or_default();
    format!(
        "{}\t{}\t{:?}\t{}\t{}\t{}",
        cls.pair.y,
        verdict_word(cls.effective),
        cls.case,
        opt(cls.t.map(|t| t.to_string())),
        opt(cls.split_a.map(|a| a.to_string())),
        opt(cls.l.map(|l| l.to_string())),
    )
}

pub fn render_classification(cls: &Classification, explain: bool, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => {
            let mut line = verdict_word(cls.effective).to_string();
            if explain {
                line.push_str(&explain_suffix(cls));
            }
            line.push('\n');
            line
        }
        OutputFormat::Tsv => format!("{TABLE_HEADER}\n{}\n", tsv_row(cls)),
        OutputFormat::Json => {
            let mut s = serde_json::to_string(cls).expect("classification serializes");
            s.push('\n');
            s
        }
    }
}

/// One verdict per second Chern class from 0 to c²; the caller bounds `c`.
pub fn render_table(c: i64, format: OutputFormat) -> String {
    let rows: Vec<Classification> = (0..=c * c).map(|y| classify(c, y)).collect();
    match format {
        OutputFormat::Plain => {
            let mut out = String::new();
            for cls in &rows {
                writeln!(
                    out,
                    "{} {}{}",
                    cls.pair.y,
                    verdict_word(cls.effective),
                    explain_suffix(cls)
                )
                .unwrap();
            }
            out
        }
        OutputFormat::Tsv => {
            let mut out = String::from(TABLE_HEADER);
            out.push('\n');
            for cls in &rows {
                out.push_str(&tsv_row(cls));
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let mut s = serde_json::to_string(&rows).expect("classifications serialize");
            s.push('\n');
            s
        }
    }
}

/// One line per window gap: the gap and its mirror image c² − y. Classes
/// without gaps produce no output at all.
pub fn render_gaps(c: i64) -> Result<String, DomainError> {
    let gaps = gap_set(c)?;
    let sq = (c as i128) * (c as i128);
    let mut out = String::new();
    for y in gaps.iter_members() {
        if 4 * (y as i128) < sq {
            writeln!(out, "{} {}", y, sq - y as i128).unwrap();
        }
    }
    Ok(out)
}

/// The gap intervals of the degree-d Lüroth semigroup on one line.
pub fn render_luroth(d: i64) -> Result<String, DomainError> {
    let gaps = luroth_gaps(d)?;
    Ok(if gaps.is_empty() {
        String::new()
    } else {
        format!("{gaps}\n")
    })
}

/// Bidegree lines `y c²−y` for every effective class, marking the pairs
/// whose section scheme embeds.
pub fn render_bidegrees(c: i64) -> Result<String, DomainError> {
    let mut out = String::new();
    for (y, dual) in bidegrees(c)? {
        let mark = if EMBEDDING_PAIRS.contains(&(c, y)) {
            " embedding"
        } else {
            ""
        };
        writeln!(out, "{y} {dual}{mark}").unwrap();
    }
    Ok(out)
}

/// Hilbert function rows: the requested degree only, or the whole table up
/// to the saturation degree.
pub fn render_hilbert(z: &PointSet, degree: Option<i64>, format: OutputFormat) -> String {
    let degrees: Vec<i64> = match degree {
        Some(n) => vec![n],
        None => (0..=z.degree() as i64).collect(),
    };
    let rows: Vec<(i64, usize, usize, usize)> = degrees
        .into_iter()
        .map(|n| (n, hilbert(z, n), h0_ideal(z, n), h1_ideal(z, n)))
        .collect();
    match format {
        OutputFormat::Plain => {
            let mut out = String::new();
            for (n, h, h0, h1) in &rows {
                writeln!(out, "n={n} hilbert={h} h0={h0} h1={h1}").unwrap();
            }
            out
        }
        OutputFormat::Tsv => {
            let mut out = String::from("n\thilbert\th0\th1\n");
            for (n, h, h0, h1) in &rows {
                writeln!(out, "{n}\t{h}\t{h0}\t{h1}").unwrap();
            }
            out
        }
        OutputFormat::Json => {
            let vals: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, h, h0, h1)| json!({"n": n, "hilbert": h, "h0": h0, "h1": h1}))
                .collect();
            let mut s = serde_json::to_string(&vals).expect("rows serialize");
            s.push('\n');
            s
        }
    }
}

pub fn render_character(ch: &NumericalCharacter, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => format!("{ch}\n"),
        OutputFormat::Tsv => {
            let entries = ch
                .entries()
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!(
                "entries\tsigma\tdegree\tconnected\n{}\t{}\t{}\t{}\n",
                entries,
                ch.sigma(),
                ch.degree(),
                ch.is_connected()
            )
        }
        OutputFormat::Json => {
            let val = json!({
                "entries": ch.entries(),
                "sigma": ch.sigma(),
                "degree": ch.degree(),
                "connected": ch.is_connected(),
                "gap_indices": ch.gap_indices(),
            });
            let mut s = serde_json::to_string(&val).expect("character serializes");
            s.push('\n');
            s
        }
    }
}

pub fn render_cb(degree: i64, outcome: &CbOutcome, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => {
            let mut out = format!("{}\n", outcome.holds);
            if let Some((p, f)) = &outcome.witness {
                writeln!(out, "witness point={p} curve={f}").unwrap();
            }
            out
        }
        OutputFormat::Tsv => format!("degree\tholds\n{degree}\t{}\n", outcome.holds),
        OutputFormat::Json => {
            let val = json!({"degree": degree, "outcome": outcome});
            let mut s = serde_json::to_string(&val).expect("outcome serializes");
            s.push('\n');
            s
        }
    }
}

fn gg_verdict_text(report: &GgReport) -> String {
    match &report.verdict {
        GgVerdict::Generated => "Generated".to_string(),
        GgVerdict::NotGeneratedLocal(p) => format!("NotGeneratedLocal {p}"),
        GgVerdict::BasePointFound(p) => format!("BasePointFound {p}"),
        GgVerdict::NoRationalObstruction => "NoRationalObstruction".to_string(),
    }
}

pub fn render_gg(report: &GgReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => format!(
            "{}\nsections={} scanned={}\n",
            gg_verdict_text(report),
            report.section_count,
            report.points_scanned
        ),
        OutputFormat::Tsv => format!(
            "verdict\tsections\tscanned\n{}\t{}\t{}\n",
            gg_verdict_text(report),
            report.section_count,
            report.points_scanned
        ),
        OutputFormat::Json => {
            let mut s = serde_json::to_string(report).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_linalg::FieldSpec;
    use pointscheme::{is_cb, numerical_character, PointSet};

    fn f7() -> FieldSpec {
        FieldSpec::prime(7).unwrap()
    }

    #[test]
    fn verdict_words_for_both_outcomes() {
        assert_eq!(
            render_classification(&classify(6, 5), false, OutputFormat::Plain),
            "effective\n"
        );
        assert_eq!(
            render_classification(&classify(6, 7), false, OutputFormat::Plain),
            "gap\n"
        );
    }

    #[test]
    fn explain_line_carries_window_data() {
        let line = render_classification(&classify(16, 62), true, OutputFormat::Plain);
        assert!(line.starts_with("effective "), "{line}");
        assert!(line.contains(" t=7"), "{line}");
        assert!(line.contains(" l=34"), "{line}");
        let gap = render_classification(&classify(16, 47), true, OutputFormat::Plain);
        assert!(gap.starts_with("gap "), "{gap}");
        assert!(gap.contains(" excluded=[1,1] block=1"), "{gap}");
    }

    #[test]
    fn json_classification_round_trips() {
        let cls = classify(16, 47);
        let out = render_classification(&cls, true, OutputFormat::Json);
        let back: Classification = serde_json::from_str(out.trim_end()).unwrap();
        assert_eq!(back, cls);
        let value: serde_json::Value = serde_json::from_str(out.trim_end()).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap(), out.trim_end());
    }

    #[test]
    fn gap_lines_pair_each_window_gap_with_its_mirror() {
        assert_eq!(render_gaps(6).unwrap(), "7 29\n");
        assert_eq!(render_gaps(7).unwrap(), "8 41\n9 40\n");
        assert_eq!(render_gaps(4).unwrap(), "");
    }

    #[test]
    fn luroth_line_matches_interval_display() {
        assert_eq!(render_luroth(6).unwrap(), "[1,4] [7,7]\n");
        assert_eq!(render_luroth(2).unwrap(), "");
    }

    #[test]
    fn table_has_header_and_one_row_per_class() {
        let out = render_table(6, OutputFormat::Tsv);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 1 + 37);
        assert_eq!(lines[0], TABLE_HEADER);
        assert_eq!(lines[1], "0\teffective\tZero\t\t\t");
        assert!(lines[8].starts_with("7\tgap\tWindow1Gap\t"), "{}", lines[8]);
    }

    #[test]
    fn bidegrees_marks_embedding_rows() {
        let out = render_bidegrees(2).unwrap();
        assert_eq!(out, "0 4\n1 3 embedding\n2 2\n3 1 embedding\n4 0\n");
    }

    #[test]
    fn hilbert_and_character_renders() {
        let z = PointSet::from_ints(f7(), &[[1, 0, 0], [1, 1, 0], [1, 2, 0]]).unwrap();
        let table = render_hilbert(&z, None, OutputFormat::Tsv);
        assert_eq!(table, "n\thilbert\th0\th1\n0\t1\t0\t2\n1\t2\t1\t1\n2\t3\t3\t0\n3\t3\t7\t0\n");
        let single = render_hilbert(&z, Some(1), OutputFormat::Plain);
        assert_eq!(single, "n=1 hilbert=2 h0=1 h1=1\n");
        let ch = numerical_character(&z).unwrap();
        assert_eq!(render_character(&ch, OutputFormat::Plain), "(3)\n");
    }

    #[test]
    fn cb_render_shows_witness_line() {
        let z = PointSet::from_ints(f7(), &[[1, 0, 0]]).unwrap();
        let out = render_cb(1, &is_cb(&z, 1), OutputFormat::Plain);
        assert!(out.starts_with("false\nwitness point=[1:0:0] curve="), "{out}");
        let held = render_cb(0, &is_cb(&z, 0), OutputFormat::Plain);
        assert_eq!(held, "true\n");
    }
}
