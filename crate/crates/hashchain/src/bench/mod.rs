//! Desk-scale benchmark harness: deterministic corpora and pattern samples,
//! repeated timed runs of compile + search per algorithm and parameter
//! variant, cross-algorithm agreement checks, and table rendering.

mod corpus;
mod report;

pub use corpus::{generate_corpus, load_corpus, sample_patterns, Corpus, PatternSample};
pub use report::{render_report, AlgoRow, BenchReport, Cell, ReportFormat};

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::baselines::BaselineAlgo;
use crate::error::{Error, Result};
use crate::pattern::CompiledPattern;
use crate::search::{search_hc, search_shc, SearchBuffer, SearchMetrics};

/// Default number of timed runs per pattern length.
pub const DEFAULT_RUNS: usize = 50;

/// Pattern-length sweep used when none is given: powers of two from 8
/// to 1024.
pub fn default_lengths() -> Vec<usize> {
    (3..=10).map(|e| 1usize << e).collect()
}

/// Algorithms the harness can time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Hc,
    Shc,
    Naive,
    Horspool,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Hc,
        Algorithm::Shc,
        Algorithm::Naive,
        Algorithm::Horspool,
    ];

    /// Stable identifier used by the CLI and bench config.
    pub fn identifier(self) -> &'static str {
        match self {
            Algorithm::Hc => "hc",
            Algorithm::Shc => "shc",
            Algorithm::Naive => BaselineAlgo::Naive.identifier(),
            Algorithm::Horspool => BaselineAlgo::Horspool.identifier(),
        }
    }

    /// Whether the algorithm sweeps the (q, alpha) grid.
    pub fn parameterized(self) -> bool {
        matches!(self, Algorithm::Hc | Algorithm::Shc)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.identifier())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(baseline) = BaselineAlgo::from_identifier(s) {
            return Ok(match baseline {
                BaselineAlgo::Naive => Algorithm::Naive,
                BaselineAlgo::Horspool => Algorithm::Horspool,
            });
        }
        match s {
            "hc" => Ok(Algorithm::Hc),
            "shc" => Ok(Algorithm::Shc),
            other => Err(Error::UnknownAlgorithm(other.to_string())),
        }
    }
}

/// Where the benchmark text comes from.
#[derive(Debug, Clone)]
pub enum CorpusSource {
    /// Read a file verbatim.
    File(PathBuf),
    /// Generate `len` uniform bytes over `{0..sigma-1}` from the run seed.
    Generated { sigma: usize, len: usize },
}

/// Full description of one harness invocation.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub source: CorpusSource,
    pub pattern_lengths: Vec<usize>,
    /// Timed runs (one sampled pattern each) per pattern length.
    pub runs: usize,
    pub algorithms: Vec<Algorithm>,
    /// q values swept for the parameterized algorithms; values larger than a
    /// given pattern length are skipped for that length.
    pub q_grid: Vec<usize>,
    pub alpha_grid: Vec<u32>,
    pub seed: u64,
    /// Test hook: inflate the reported occurrence count of this algorithm on
    /// the first run, to exercise the cross-check failure path.
    pub fault: Option<Algorithm>,
}

impl BenchConfig {
    pub fn new(source: CorpusSource) -> Self {
        Self {
            source,
            pattern_lengths: default_lengths(),
            runs: DEFAULT_RUNS,
            algorithms: Algorithm::ALL.to_vec(),
            q_grid: vec![crate::params::DEFAULT_Q],
            alpha_grid: vec![crate::params::DEFAULT_ALPHA],
            seed: 1,
            fault: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::InvalidParams("runs must be at least 1".into()));
        }
        if self.pattern_lengths.is_empty() {
            return Err(Error::InvalidParams("no pattern lengths given".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::InvalidParams("no algorithms given".into()));
        }
        if self.q_grid.is_empty() || self.alpha_grid.is_empty() {
            return Err(Error::InvalidParams("empty parameter grid".into()));
        }
        if let Some(&q) = self.q_grid.iter().find(|&&q| q == 0) {
            return Err(Error::InvalidParams(format!(
                "q must be at least 1, got {q}"
            )));
        }
        if let Some(&alpha) = self.alpha_grid.iter().find(|&&a| !(8..=16).contains(&a)) {
            return Err(Error::InvalidParams(format!(
                "alpha must be in 8..=16 for benchmarking, got {alpha}"
            )));
        }
        if let CorpusSource::Generated { sigma, len } = self.source {
            if sigma == 0 || sigma > 256 || len == 0 {
                return Err(Error::InvalidParams(format!(
                    "generator spec needs sigma in 1..=256 and a nonzero length, \
                     got sigma={sigma}, len={len}"
                )));
            }
        }
        Ok(())
    }
}

/// One measured variant before best-of-grid selection.
struct VariantMeasure {
    q: Option<usize>,
    alpha: Option<u32>,
    total: Duration,
    counts: Vec<usize>,
    hashes_per_byte_sum: f64,
    verifications_per_window_sum: f64,
    instrumented: bool,
    /// Runs whose interval was under 1000x the timer resolution.
    coarse_runs: u64,
}

/// Runs the configured sweep. Per (algorithm, length, grid point): times
/// compile + search over `runs` sampled patterns on a monotonic clock, checks
/// that every variant agrees on the occurrence count of every run, and keeps
/// the fastest grid point per algorithm and length (ties broken by smaller q,
/// then smaller alpha).
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    config.validate()?;
    let corpus = match &config.source {
        CorpusSource::File(path) => load_corpus(path)?,
        CorpusSource::Generated { sigma, len } => generate_corpus(*sigma, *len, config.seed)?,
    };
    for &m in &config.pattern_lengths {
        if m == 0 || m > corpus.len() {
            return Err(Error::InvalidParams(format!(
                "pattern length {m} not in 1..={}",
                corpus.len()
            )));
        }
    }

    let resolution = timer_resolution();
    let mut coarse_intervals = 0u64;
    let mut rows: Vec<AlgoRow> = config
        .algorithms
        .iter()
        .map(|&algorithm| AlgoRow {
            algorithm,
            cells: Vec::with_capacity(config.pattern_lengths.len()),
        })
        .collect();

    for &m in &config.pattern_lengths {
        let patterns = sample_patterns(&corpus, m, config.runs, pattern_seed(config.seed, m))?;
        let mut buffer = SearchBuffer::with_slack(&corpus.data, m);
        // counts of the first measured variant; everything else must agree
        let mut reference: Option<Vec<usize>> = None;

        for (row, &algorithm) in rows.iter_mut().zip(&config.algorithms) {
            let grid: Vec<(Option<usize>, Option<u32>)> = if algorithm.parameterized() {
                config
                    .q_grid
                    .iter()
                    .filter(|&&q| q <= m)
                    .flat_map(|&q| config.alpha_grid.iter().map(move |&a| (Some(q), Some(a))))
                    .collect()
            } else {
                vec![(None, None)]
            };
            if grid.is_empty() {
                return Err(Error::InvalidParams(format!(
                    "no q in the grid fits pattern length {m} for {algorithm}"
                )));
            }

            let mut best: Option<VariantMeasure> = None;
            for (q, alpha) in grid {
                let measure = measure_variant(
                    algorithm,
                    q,
                    alpha,
                    &patterns,
                    &corpus,
                    &mut buffer,
                    config.fault,
                    resolution,
                )?;
                coarse_intervals += measure.coarse_runs;
                match &reference {
                    None => reference = Some(measure.counts.clone()),
                    Some(expected) => {
                        if &measure.counts != expected {
                            return Err(count_mismatch(
                                &corpus,
                                algorithm,
                                q,
                                alpha,
                                &patterns,
                                expected,
                                &measure.counts,
                            ));
                        }
                    }
                }
                let better = match &best {
                    None => true,
                    Some(current) => {
                        (measure.total, measure.q, measure.alpha)
                            < (current.total, current.q, current.alpha)
                    }
                };
                if better {
                    best = Some(measure);
                }
            }

            let best = best.expect("grid is never empty here");
            let runs = config.runs as f64;
            row.cells.push(Cell {
                m,
                mean_ms: best.total.as_secs_f64() * 1e3 / runs,
                best_q: best.q,
                best_alpha: best.alpha,
                occurrence_checksum: best.counts.iter().map(|&c| c as u64).sum(),
                hashes_per_byte: best.instrumented.then(|| best.hashes_per_byte_sum / runs),
                verifications_per_window: best
                    .instrumented
                    .then(|| best.verifications_per_window_sum / runs),
            });
        }
    }

    let mut warnings = Vec::new();
    if coarse_intervals > 0 {
        warnings.push(format!(
            "{coarse_intervals} measured interval(s) were below 1000x the timer \
             resolution ({resolution:?}); those times have fewer than 3 significant digits"
        ));
    }
    Ok(BenchReport {
        corpus_name: corpus.name.clone(),
        corpus_len: corpus.len(),
        corpus_sigma: corpus.sigma_observed,
        runs: config.runs,
        pattern_lengths: config.pattern_lengths.clone(),
        rows,
        warnings,
    })
}

#[allow(clippy::too_many_arguments)]
fn measure_variant(
    algorithm: Algorithm,
    q: Option<usize>,
    alpha: Option<u32>,
    patterns: &[PatternSample],
    corpus: &Corpus,
    buffer: &mut SearchBuffer,
    fault: Option<Algorithm>,
    resolution: Duration,
) -> Result<VariantMeasure> {
    let mut total = Duration::ZERO;
    let mut counts = Vec::with_capacity(patterns.len());
    let mut hashes_per_byte_sum = 0.0;
    let mut verifications_per_window_sum = 0.0;
    let mut coarse_runs = 0u64;
    let n = corpus.len() as f64;

    for (run, sample) in patterns.iter().enumerate() {
        let pattern = &sample.bytes;
        let (elapsed, mut count, metrics) = match algorithm {
            Algorithm::Hc => {
                let started = Instant::now();
                let cp = CompiledPattern::compile(pattern, q.unwrap(), alpha.unwrap())?;
                let (occurrences, metrics) = search_hc(&cp, &corpus.data);
                (started.elapsed(), occurrences.len(), Some(metrics))
            }
            Algorithm::Shc => {
                let started = Instant::now();
                let cp = CompiledPattern::compile(pattern, q.unwrap(), alpha.unwrap())?;
                let (occurrences, metrics) = search_shc(&cp, buffer)?;
                (started.elapsed(), occurrences.len(), Some(metrics))
            }
            Algorithm::Naive => {
                let started = Instant::now();
                let occurrences = BaselineAlgo::Naive.search(pattern, &corpus.data)?;
                (started.elapsed(), occurrences.len(), None)
            }
            Algorithm::Horspool => {
                let started = Instant::now();
                let occurrences = BaselineAlgo::Horspool.search(pattern, &corpus.data)?;
                (started.elapsed(), occurrences.len(), None)
            }
        };
        total += elapsed;
        if elapsed < resolution.saturating_mul(1000) {
            coarse_runs += 1;
        }
        if fault == Some(algorithm) && run == 0 {
            count += 1;
        }
        counts.push(count);
        if let Some(metrics) = metrics {
            hashes_per_byte_sum += metrics.qgram_hashes as f64 / n;
            verifications_per_window_sum += per_window(&metrics);
        }
    }

    Ok(VariantMeasure {
        q,
        alpha,
        total,
        counts,
        hashes_per_byte_sum,
        verifications_per_window_sum,
        instrumented: algorithm.parameterized(),
        coarse_runs,
    })
}

fn per_window(metrics: &SearchMetrics) -> f64 {
    if metrics.windows == 0 {
        0.0
    } else {
        metrics.verifications as f64 / metrics.windows as f64
    }
}

fn count_mismatch(
    corpus: &Corpus,
    algorithm: Algorithm,
    q: Option<usize>,
    alpha: Option<u32>,
    patterns: &[PatternSample],
    expected: &[usize],
    got: &[usize],
) -> Error {
    let run = expected
        .iter()
        .zip(got)
        .position(|(e, g)| e != g)
        .unwrap_or(0);
    let sample = &patterns[run];
    let preview_len = sample.bytes.len().min(32);
    let preview: String = sample.bytes[..preview_len]
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    Error::CountMismatch(format!(
        "run {run}: {algorithm} (q={q:?}, alpha={alpha:?}) found {} occurrences, \
         expected {}; pattern of length {} sampled at offset {} ({preview}{}), \
         text = corpus {} ({} bytes)",
        got[run],
        expected[run],
        sample.bytes.len(),
        sample.offset,
        if sample.bytes.len() > preview_len {
            ".."
        } else {
            ""
        },
        corpus.name,
        corpus.len(),
    ))
}

fn pattern_seed(seed: u64, m: usize) -> u64 {
    seed ^ (m as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Smallest positive step the monotonic clock was observed to take.
fn timer_resolution() -> Duration {
    let mut best = Duration::from_millis(1);
    for _ in 0..64 {
        let started = Instant::now();
        let mut now = Instant::now();
        let mut polls = 0;
        while now == started && polls < 10_000 {
            now = Instant::now();
            polls += 1;
        }
        let step = now - started;
        if step > Duration::ZERO && step < best {
            best = step;
        }
    }
    best
}
