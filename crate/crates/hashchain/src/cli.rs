//! Command-line front end: `search`, `bench`, and `selftest` subcommands.
//!
//! Exit codes: 0 for a successful run that found at least one occurrence
//! (or a successful bench/selftest), 1 for a clean search with no
//! occurrences, 2 for usage or I/O errors, 3 when the bench cross-check
//! catches disagreeing algorithms, 4 when the selftest finds a mismatch.

use std::ffi::{OsStr, OsString};
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::bench::{
    self, render_report, Algorithm, BenchConfig, CorpusSource, ReportFormat, DEFAULT_RUNS,
};
use crate::error::Error;
use crate::params::{DEFAULT_ALPHA, DEFAULT_Q};
use crate::pattern::CompiledPattern;
use crate::search::{search_hc, search_shc, Occurrence, SearchBuffer};
use crate::selftest;

pub const EXIT_FOUND: i32 = 0;
pub const EXIT_NOT_FOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BENCH_MISMATCH: i32 = 3;
pub const EXIT_SELFTEST_FAILED: i32 = 4;

#[derive(Parser)]
#[command(
    name = "hashchain",
    version,
    about = "Exact byte-string search built on linked q-gram filters, \
             with a benchmark harness and a randomized selftest"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search a file for a pattern and print match offsets.
    Search(SearchArgs),
    /// Time the algorithms over a corpus and print a table.
    Bench(BenchArgs),
    /// Run randomized differential trials against the naive oracle.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct SearchArgs {
    /// Pattern as a literal argument, taken as raw bytes.
    #[arg(
        short,
        long,
        required_unless_present = "pattern_file",
        conflicts_with = "pattern_file"
    )]
    pattern: Option<OsString>,

    /// Read the pattern from this file instead (binary safe).
    #[arg(long, value_name = "FILE")]
    pattern_file: Option<PathBuf>,

    /// Algorithm: hc, shc, naive or horspool.
    #[arg(long, default_value = "hc")]
    algo: String,

    /// q-gram length; clamped to the pattern length with a warning.
    #[arg(short, long, default_value_t = DEFAULT_Q)]
    q: usize,

    /// Filter-table exponent (table has 2^alpha words).
    #[arg(short, long, default_value_t = DEFAULT_ALPHA)]
    alpha: u32,

    /// Print only the number of occurrences.
    #[arg(short, long)]
    count: bool,

    /// File to search.
    text: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Corpus file, read verbatim.
    #[arg(
        long,
        value_name = "FILE",
        required_unless_present = "gen",
        conflicts_with = "gen"
    )]
    corpus: Option<PathBuf>,

    /// Generate a corpus instead: SIGMA,LEN (e.g. 4,1000000).
    #[arg(long, value_name = "SIGMA,LEN")]
    gen: Option<String>,

    /// Pattern lengths to sweep.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "8,16,32,64,128,256,512,1024"
    )]
    lengths: Vec<usize>,

    /// Timed runs per pattern length.
    #[arg(long, default_value_t = DEFAULT_RUNS)]
    runs: usize,

    /// Algorithms to time.
    #[arg(long, value_delimiter = ',', default_value = "hc,shc,naive,horspool")]
    algos: Vec<String>,

    /// q grid for hc/shc.
    #[arg(long, value_delimiter = ',', default_value = "4")]
    q: Vec<usize>,

    /// alpha grid for hc/shc.
    #[arg(long, value_delimiter = ',', default_value = "12")]
    alpha: Vec<u32>,

    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Report format: md or tsv.
    #[arg(long, default_value = "md")]
    format: String,

    /// Fault-injection hook used by the test suite: corrupt this
    /// algorithm's occurrence counts so the cross-check trips.
    #[arg(long, hide = true)]
    corrupt: Option<String>,
}

#[derive(Args)]
struct SelftestArgs {
    /// Number of randomized trials.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,

    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Parses `args` (including the program name) and runs the selected
/// subcommand, writing results to `out` and diagnostics to `err`. Returns
/// the process exit code.
pub fn run<W: Write, E: Write>(
    args: impl IntoIterator<Item = OsString>,
    out: &mut W,
    err: &mut E,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(parse_error) => {
            return match parse_error.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{parse_error}");
                    EXIT_FOUND
                }
                _ => {
                    let _ = write!(err, "{parse_error}");
                    EXIT_USAGE
                }
            };
        }
    };
    match cli.command {
        Command::Search(args) => cmd_search(args, out, err),
        Command::Bench(args) => cmd_bench(args, out, err),
        Command::Selftest(args) => cmd_selftest(args, out, err),
    }
}

fn cmd_search<W: Write, E: Write>(args: SearchArgs, out: &mut W, err: &mut E) -> i32 {
    let pattern = match &args.pattern_file {
        Some(path) => match fs::read(path) {
            Ok(bytes) => bytes,
            Err(io) => {
                let _ = writeln!(
                    err,
                    "hashchain: cannot read pattern file {}: {io}",
                    path.display()
                );
                return EXIT_USAGE;
            }
        },
        None => os_bytes(args.pattern.as_deref().expect("clap enforces one source")),
    };
    if pattern.is_empty() {
        let _ = writeln!(err, "hashchain: {}", Error::EmptyPattern);
        return EXIT_USAGE;
    }
    let text = match fs::read(&args.text) {
        Ok(bytes) => bytes,
        Err(io) => {
            let _ = writeln!(err, "hashchain: cannot read {}: {io}", args.text.display());
            return EXIT_USAGE;
        }
    };
    let algorithm: Algorithm = match args.algo.parse() {
        Ok(algorithm) => algorithm,
        Err(error) => {
            let _ = writeln!(err, "hashchain: {error}");
            return EXIT_USAGE;
        }
    };
    let mut q = args.q;
    if q > pattern.len() {
        let _ = writeln!(
            err,
            "hashchain: warning: q={q} exceeds the pattern length; using q={}",
            pattern.len()
        );
        q = pattern.len();
    }

    let occurrences = match run_search(algorithm, &pattern, text, q, args.alpha) {
        Ok(occurrences) => occurrences,
        Err(error) => {
            let _ = writeln!(err, "hashchain: {error}");
            return EXIT_USAGE;
        }
    };
    if args.count {
        let _ = writeln!(out, "{}", occurrences.len());
    } else {
        for occurrence in &occurrences {
            let _ = writeln!(out, "{}", occurrence.start);
        }
    }
    if occurrences.is_empty() {
        EXIT_NOT_FOUND
    } else {
        EXIT_FOUND
    }
}

fn run_search(
    algorithm: Algorithm,
    pattern: &[u8],
    text: Vec<u8>,
    q: usize,
    alpha: u32,
) -> crate::error::Result<Vec<Occurrence>> {
    match algorithm {
        Algorithm::Hc => {
            let cp = CompiledPattern::compile(pattern, q, alpha)?;
            Ok(search_hc(&cp, &text).0)
        }
        Algorithm::Shc => {
            let cp = CompiledPattern::compile(pattern, q, alpha)?;
            let mut buffer = SearchBuffer::from_vec(text, pattern.len());
            Ok(search_shc(&cp, &mut buffer)?.0)
        }
        Algorithm::Naive => crate::baselines::naive_search(pattern, &text),
        Algorithm::Horspool => crate::baselines::horspool_search(pattern, &text),
    }
}

fn cmd_bench<W: Write, E: Write>(args: BenchArgs, out: &mut W, err: &mut E) -> i32 {
    let config = match bench_config(&args) {
        Ok(config) => config,
        Err(error) => {
            let _ = writeln!(err, "hashchain: {error}");
            return EXIT_USAGE;
        }
    };
    let format: ReportFormat = match args.format.parse() {
        Ok(format) => format,
        Err(error) => {
            let _ = writeln!(err, "hashchain: {error}");
            return EXIT_USAGE;
        }
    };
    match bench::run_bench(&config) {
        Ok(report) => {
            let _ = write!(out, "{}", render_report(&report, format));
            EXIT_FOUND
        }
        Err(error @ Error::CountMismatch(_)) => {
            let _ = writeln!(err, "hashchain: correctness failure: {error}");
            EXIT_BENCH_MISMATCH
        }
        Err(error) => {
            let _ = writeln!(err, "hashchain: {error}");
            EXIT_USAGE
        }
    }
}

fn bench_config(args: &BenchArgs) -> crate::error::Result<BenchConfig> {
    let source = match (&args.corpus, &args.gen) {
        (Some(path), None) => CorpusSource::File(path.clone()),
        (None, Some(spec)) => parse_gen_spec(spec)?,
        _ => unreachable!("clap enforces exactly one corpus source"),
    };
    let mut algorithms = Vec::with_capacity(args.algos.len());
    for name in &args.algos {
        algorithms.push(name.parse::<Algorithm>()?);
    }
    let fault = match &args.corrupt {
        Some(name) => Some(name.parse::<Algorithm>()?),
        None => None,
    };
    Ok(BenchConfig {
        source,
        pattern_lengths: args.lengths.clone(),
        runs: args.runs,
        algorithms,
        q_grid: args.q.clone(),
        alpha_grid: args.alpha.clone(),
        seed: args.seed,
        fault,
    })
}

fn parse_gen_spec(spec: &str) -> crate::error::Result<CorpusSource> {
    let invalid = || {
        Error::InvalidParams(format!(
            "generator spec must be SIGMA,LEN (e.g. 4,1000000), got {spec:?}"
        ))
    };
    let (sigma, len) = spec.split_once(',').ok_or_else(invalid)?;
    Ok(CorpusSource::Generated {
        sigma: sigma.trim().parse().map_err(|_| invalid())?,
        len: len.trim().parse().map_err(|_| invalid())?,
    })
}

fn cmd_selftest<W: Write, E: Write>(args: SelftestArgs, out: &mut W, err: &mut E) -> i32 {
    let report = selftest::run(args.trials, args.seed);
    match report.failure {
        None => {
            let _ = writeln!(
                out,
                "selftest: {} trials passed (hc and shc match the naive oracle)",
                report.trials_run
            );
            EXIT_FOUND
        }
        Some(failure) => {
            let _ = writeln!(err, "selftest: FAILED after {} trials", report.trials_run);
            let _ = writeln!(err, "  {}", failure.detail);
            let _ = writeln!(
                err,
                "  q={} alpha={} pattern({})={} text({})={}",
                failure.case.q,
                failure.case.alpha,
                failure.case.pattern.len(),
                hex_preview(&failure.case.pattern),
                failure.case.text.len(),
                hex_preview(&failure.case.text),
            );
            let _ = writeln!(
                err,
                "  naive={:?} hc={:?} shc={:?}",
                failure.expected, failure.hc, failure.shc
            );
            EXIT_SELFTEST_FAILED
        }
    }
}

fn hex_preview(bytes: &[u8]) -> String {
    const LIMIT: usize = 256;
    let shown = bytes.len().min(LIMIT);
    let mut text: String = bytes[..shown].iter().map(|b| format!("{b:02x}")).collect();
    if bytes.len() > LIMIT {
        text.push_str("..");
    }
    text
}

fn os_bytes(s: &OsStr) -> Vec<u8> {
    #[cfg(unix)]
    {
        std::os::unix::ffi::OsStrExt::as_bytes(s).to_vec()
    }
    #[cfg(not(unix))]
    {
        s.to_string_lossy().into_owned().into_bytes()
    }
}
