//! Watch the work counters as the pattern grows: longer patterns allow
//! longer shifts, so the number of q-gram hashes per text byte falls even
//! though the text stays the same.
//!
//!     cargo run --release --example instrumented_search

use hashchain::bench::{generate_corpus, sample_patterns};
use hashchain::{search_hc, CompiledPattern};

fn main() -> hashchain::Result<()> {
    let n = 1 << 20;
    let corpus = generate_corpus(4, n, 42)?;
    let (q, alpha) = (6usize, 12u32);
    println!(
        "corpus {}: {} bytes, sigma={}; q={q}, alpha={alpha}",
        corpus.name, n, corpus.sigma_observed
    );
    println!(
        "{:>6} {:>14} {:>12} {:>12} {:>14}",
        "m", "hashes/byte", "mean shift", "windows", "verifications"
    );

    for m in [16usize, 32, 64, 128, 256, 512] {
        let samples = sample_patterns(&corpus, m, 20, m as u64)?;
        let mut hashes = 0u64;
        let mut windows = 0u64;
        let mut verifications = 0u64;
        for sample in &samples {
            let compiled = CompiledPattern::compile(&sample.bytes, q, alpha)?;
            let (occurrences, metrics) = search_hc(&compiled, &corpus.data);
            assert!(occurrences.iter().any(|o| o.start == sample.offset));
            hashes += metrics.qgram_hashes;
            windows += metrics.windows;
            verifications += metrics.verifications;
        }
        let runs = samples.len() as f64;
        let span = (n - m + 1) as f64 * runs;
        println!(
            "{:>6} {:>14.4} {:>12.1} {:>12.0} {:>14.2}",
            m,
            hashes as f64 / runs / n as f64,
            span / windows as f64,
            windows as f64 / runs,
            verifications as f64 / runs,
        );
    }
    Ok(())
}
