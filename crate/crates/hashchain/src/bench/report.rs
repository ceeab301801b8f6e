//! Report assembly and rendering: a wide table per corpus, algorithms as
//! rows and pattern lengths as columns, best grid parameters alongside each
//! mean time.

use std::fmt::Write;
use std::str::FromStr;

use super::Algorithm;
use crate::error::Error;

/// Output formats for [`render_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Tsv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "tsv" => Ok(ReportFormat::Tsv),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Result for one (algorithm, pattern length) pair: the fastest grid variant
/// and its measurements.
#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub m: usize,
    /// Mean wall time of compile + search, in milliseconds.
    pub mean_ms: f64,
    /// Winning q, for parameterized algorithms.
    pub best_q: Option<usize>,
    /// Winning alpha, for parameterized algorithms.
    pub best_alpha: Option<u32>,
    /// Sum of the occurrence counts over the runs; equal across algorithms
    /// for the same pattern length by the harness's cross-check.
    pub occurrence_checksum: u64,
    /// Mean q-gram hashes per text byte (instrumented algorithms only).
    pub hashes_per_byte: Option<f64>,
    /// Mean verifications per window (instrumented algorithms only).
    pub verifications_per_window: Option<f64>,
}

/// One table row: an algorithm and its cell per pattern length.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgoRow {
    pub algorithm: Algorithm,
    pub cells: Vec<Cell>,
}

/// Everything one harness invocation measured.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub corpus_name: String,
    pub corpus_len: usize,
    pub corpus_sigma: usize,
    pub runs: usize,
    pub pattern_lengths: Vec<usize>,
    pub rows: Vec<AlgoRow>,
    pub warnings: Vec<String>,
}

/// Serializes a report. Deterministic: the same report renders to the same
/// bytes.
pub fn render_report(report: &BenchReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Tsv => render_tsv(report),
        ReportFormat::Markdown => render_markdown(report),
    }
}

fn cell_text(cell: &Cell) -> String {
    match (cell.best_q, cell.best_alpha) {
        (Some(q), Some(alpha)) => format!("{:.2} ({q},{alpha})", cell.mean_ms),
        _ => format!("{:.2}", cell.mean_ms),
    }
}

fn render_tsv(report: &BenchReport) -> String {
    let mut out = String::from("algorithm");
    for m in &report.pattern_lengths {
        write!(out, "\t{m}").unwrap();
    }
    out.push('\n');
    for row in &report.rows {
        out.push_str(row.algorithm.identifier());
        for cell in &row.cells {
            write!(out, "\t{}", cell_text(cell)).unwrap();
        }
        out.push('\n');
    }
    out
}

fn render_markdown(report: &BenchReport) -> String {
    let mut out = format!(
        "Corpus `{}`: {} bytes, {} distinct byte values. \
         Mean of {} runs per pattern length, compile + search, in milliseconds; \
         fastest (q,alpha) of the grid in parentheses.\n\n",
        report.corpus_name, report.corpus_len, report.corpus_sigma, report.runs
    );
    out.push_str("| m |");
    for m in &report.pattern_lengths {
        write!(out, " {m} |").unwrap();
    }
    out.push_str("\n|---|");
    for _ in &report.pattern_lengths {
        out.push_str("---:|");
    }
    out.push('\n');
    for row in &report.rows {
        write!(out, "| {} |", row.algorithm.identifier()).unwrap();
        for cell in &row.cells {
            write!(out, " {} |", cell_text(cell)).unwrap();
        }
        out.push('\n');
    }
    for warning in &report.warnings {
        write!(out, "\n> warning: {warning}\n").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report() -> BenchReport {
        let cell = |m: usize, ms: f64, p: Option<(usize, u32)>| Cell {
            m,
            mean_ms: ms,
            best_q: p.map(|(q, _)| q),
            best_alpha: p.map(|(_, a)| a),
            occurrence_checksum: 42,
            hashes_per_byte: p.map(|_| 0.05),
            verifications_per_window: p.map(|_| 0.001),
        };
        BenchReport {
            corpus_name: "gen-s4-n1000".into(),
            corpus_len: 1000,
            corpus_sigma: 4,
            runs: 5,
            pattern_lengths: vec![8, 16],
            rows: vec![
                AlgoRow {
                    algorithm: Algorithm::Hc,
                    cells: vec![
                        cell(8, 1.234, Some((4, 12))),
                        cell(16, 0.987, Some((6, 12))),
                    ],
                },
                AlgoRow {
                    algorithm: Algorithm::Naive,
                    cells: vec![cell(8, 4.5, None), cell(16, 4.499, None)],
                },
            ],
            warnings: vec![],
        }
    }

    #[test]
    fn tsv_is_one_header_and_one_row_per_algorithm() {
        let text = render_tsv(&sample_report());
        assert_eq!(
            text,
            "algorithm\t8\t16\nhc\t1.23 (4,12)\t0.99 (6,12)\nnaive\t4.50\t4.50\n"
        );
        let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split('\t').collect()).collect();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.len() == 3));
    }

    #[test]
    fn markdown_has_algorithms_as_rows_and_lengths_as_columns() {
        let text = render_markdown(&sample_report());
        assert!(text.contains("| m | 8 | 16 |"));
        assert!(text.contains("| hc | 1.23 (4,12) | 0.99 (6,12) |"));
        assert!(text.contains("| naive | 4.50 | 4.50 |"));
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn rendering_is_deterministic() {
        let report = sample_report();
        assert_eq!(
            render_report(&report, ReportFormat::Markdown),
            render_report(&report, ReportFormat::Markdown)
        );
        assert_eq!(
            render_report(&report, ReportFormat::Tsv),
            render_report(&report, ReportFormat::Tsv)
        );
    }

    #[test]
    fn format_names_parse() {
        assert_eq!("tsv".parse::<ReportFormat>().unwrap(), ReportFormat::Tsv);
        assert_eq!(
            "md".parse::<ReportFormat>().unwrap(),
            ReportFormat::Markdown
        );
        assert_eq!(
            "markdown".parse::<ReportFormat>().unwrap(),
            ReportFormat::Markdown
        );
        assert!(matches!(
            "csv".parse::<ReportFormat>(),
            Err(Error::UnknownFormat(_))
        ));
    }
}
