//! Corpus acquisition and pattern sampling for the bench harness.

use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A text to search: a label, the raw bytes, and how many distinct byte
/// values actually occur in them.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub name: String,
    pub data: Vec<u8>,
    pub sigma_observed: usize,
}

impl Corpus {
    /// Wraps raw bytes, computing the observed alphabet size.
    pub fn from_bytes(name: impl Into<String>, data: Vec<u8>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::InvalidParams("corpus data is empty".into()));
        }
        let mut seen = [false; 256];
        for &b in &data {
            seen[b as usize] = true;
        }
        Ok(Self {
            name: name.into(),
            sigma_observed: seen.iter().filter(|&&s| s).count(),
            data,
        })
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }
}

/// `n` i.i.d. uniform bytes over `{0..sigma-1}` from a seeded generator.
/// The same `(sigma, n, seed)` always yields the same corpus.
pub fn generate_corpus(sigma: usize, n: usize, seed: u64) -> Result<Corpus> {
    if sigma == 0 || sigma > 256 {
        return Err(Error::InvalidParams(format!(
            "alphabet size must be in 1..=256, got {sigma}"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidParams(
            "corpus length must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data: Vec<u8> = (0..n).map(|_| rng.random_range(0..sigma) as u8).collect();
    Corpus::from_bytes(format!("gen-s{sigma}-n{n}"), data)
}

/// Reads a corpus file verbatim.
pub fn load_corpus(path: impl AsRef<Path>) -> Result<Corpus> {
    let path = path.as_ref();
    let data = fs::read(path).map_err(|source| Error::CorpusIo {
        path: path.to_path_buf(),
        source,
    })?;
    if data.is_empty() {
        return Err(Error::EmptyCorpus {
            path: path.to_path_buf(),
        });
    }
    Corpus::from_bytes(path.display().to_string(), data)
}

/// A pattern extracted from a corpus, together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSample {
    pub offset: usize,
    pub bytes: Vec<u8>,
}

/// Extracts `count` substrings of length `m` at uniformly random offsets
/// from a seeded generator; deterministic per seed.
pub fn sample_patterns(
    corpus: &Corpus,
    m: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<PatternSample>> {
    if m == 0 || m > corpus.len() {
        return Err(Error::InvalidParams(format!(
            "pattern length {m} not in 1..={}",
            corpus.len()
        )));
    }
    if count == 0 {
        return Err(Error::InvalidParams(
            "sample count must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let offset = rng.random_range(0..=corpus.len() - m);
            PatternSample {
                offset,
                bytes: corpus.data[offset..offset + m].to_vec(),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselines::naive_search;
    use std::io::Write;

    #[test]
    fn unary_alphabet_generates_identical_bytes() {
        let corpus = generate_corpus(1, 100, 7).unwrap();
        assert_eq!(corpus.data, vec![0u8; 100]);
        assert_eq!(corpus.sigma_observed, 1);
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate_corpus(4, 100_000, 42).unwrap();
        let b = generate_corpus(4, 100_000, 42).unwrap();
        assert_eq!(a.data, b.data);
        assert_eq!(a.name, "gen-s4-n100000");
        let c = generate_corpus(4, 100_000, 43).unwrap();
        assert_ne!(a.data, c.data);
    }

    #[test]
    fn symbol_frequencies_are_near_uniform() {
        let n = 1_000_000;
        let corpus = generate_corpus(4, n, 42).unwrap();
        assert_eq!(corpus.sigma_observed, 4);
        let mut counts = [0usize; 4];
        for &b in &corpus.data {
            counts[b as usize] += 1;
        }
        for (symbol, &count) in counts.iter().enumerate() {
            let expected = n / 4;
            let deviation = count.abs_diff(expected);
            assert!(
                deviation * 100 <= n / 4,
                "symbol {symbol}: count {count} deviates more than 1% from {expected}"
            );
        }
    }

    #[test]
    fn generation_rejects_bad_parameters() {
        assert!(generate_corpus(0, 10, 1).is_err());
        assert!(generate_corpus(257, 10, 1).is_err());
        assert!(generate_corpus(4, 0, 1).is_err());
    }

    #[test]
    fn load_reads_verbatim_and_counts_symbols() {
        let dir = std::env::temp_dir();
        let path = dir.join(format!("hashchain-corpus-{}.bin", std::process::id()));
        let mut file = fs::File::create(&path).unwrap();
        file.write_all(&[b'a'; 100]).unwrap();
        drop(file);
        let corpus = load_corpus(&path).unwrap();
        assert_eq!(corpus.data.len(), 100);
        assert_eq!(corpus.sigma_observed, 1);

        fs::write(&path, b"").unwrap();
        assert!(matches!(load_corpus(&path), Err(Error::EmptyCorpus { .. })));
        fs::remove_file(&path).unwrap();

        let missing = dir.join("hashchain-no-such-file");
        match load_corpus(&missing) {
            Err(Error::CorpusIo { path, .. }) => assert_eq!(path, missing),
            other => panic!("expected CorpusIo, got {other:?}"),
        }
    }

    #[test]
    fn samples_are_deterministic_and_really_occur() {
        let corpus = generate_corpus(4, 5000, 5).unwrap();
        let a = sample_patterns(&corpus, 12, 20, 99).unwrap();
        let b = sample_patterns(&corpus, 12, 20, 99).unwrap();
        assert_eq!(a, b);
        for sample in &a {
            assert_eq!(
                &corpus.data[sample.offset..sample.offset + 12],
                &sample.bytes[..]
            );
            let found = naive_search(&sample.bytes, &corpus.data).unwrap();
            assert!(found.iter().any(|o| o.start == sample.offset));
        }
    }

    #[test]
    fn whole_corpus_sample_is_the_corpus() {
        let corpus = generate_corpus(4, 64, 5).unwrap();
        let samples = sample_patterns(&corpus, 64, 3, 1).unwrap();
        for s in samples {
            assert_eq!(s.offset, 0);
            assert_eq!(s.bytes, corpus.data);
        }
        assert!(sample_patterns(&corpus, 65, 1, 1).is_err());
    }
}
