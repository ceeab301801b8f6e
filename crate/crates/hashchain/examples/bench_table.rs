//! Run the benchmark harness over a generated corpus and print the table:
//! algorithms as rows, pattern lengths as columns, best grid parameters in
//! parentheses. Times are means of compile + search.
//!
//!     cargo run --release --example bench_table

use hashchain::bench::{
    render_report, run_bench, Algorithm, BenchConfig, CorpusSource, ReportFormat,
};

fn main() -> hashchain::Result<()> {
    let config = BenchConfig {
        source: CorpusSource::Generated {
            sigma: 4,
            len: 1 << 20,
        },
        pattern_lengths: vec![8, 32, 128, 512],
        runs: 10,
        algorithms: vec![
            Algorithm::Hc,
            Algorithm::Shc,
            Algorithm::Horspool,
            Algorithm::Naive,
        ],
        q_grid: vec![4, 6],
        alpha_grid: vec![10, 12],
        seed: 1,
        fault: None,
    };
    let report = run_bench(&config)?;
    print!("{}", render_report(&report, ReportFormat::Markdown));

    // the same report serializes to TSV for downstream tooling
    let tsv = render_report(&report, ReportFormat::Tsv);
    println!("\nTSV form, {} rows:", tsv.lines().count());
    print!("{tsv}");
    Ok(())
}
