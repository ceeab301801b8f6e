//! Reference searchers: a naive scan used as the ground-truth oracle, and
//! Horspool as a parameter-free classical baseline for the bench harness.

use crate::error::{Error, Result};
use crate::search::Occurrence;

/// Identifier for a reference searcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaselineAlgo {
    Naive,
    Horspool,
}

impl BaselineAlgo {
    pub const ALL: [BaselineAlgo; 2] = [BaselineAlgo::Naive, BaselineAlgo::Horspool];

    /// Stable identifier used by the CLI and bench config.
    pub fn identifier(self) -> &'static str {
        match self {
            BaselineAlgo::Naive => "naive",
            BaselineAlgo::Horspool => "horspool",
        }
    }

    pub fn from_identifier(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.identifier() == s)
    }

    pub fn search(self, pattern: &[u8], text: &[u8]) -> Result<Vec<Occurrence>> {
        match self {
            BaselineAlgo::Naive => naive_search(pattern, text),
            BaselineAlgo::Horspool => horspool_search(pattern, text),
        }
    }
}

/// Every start position of `pattern` in `text`, ascending, by direct
/// comparison of each window. O(nm) worst case.
pub fn naive_search(pattern: &[u8], text: &[u8]) -> Result<Vec<Occurrence>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    Ok(text
        .windows(pattern.len())
        .enumerate()
        .filter(|(_, window)| *window == pattern)
        .map(|(start, _)| Occurrence { start })
        .collect())
}

/// Every start position of `pattern` in `text`, ascending, using the
/// bad-character rule: a 256-entry table of last-occurrence shifts.
pub fn horspool_search(pattern: &[u8], text: &[u8]) -> Result<Vec<Occurrence>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let m = pattern.len();
    let n = text.len();
    let mut occurrences = Vec::new();
    if n < m {
        return Ok(occurrences);
    }
    let mut skip = [m; 256];
    for (i, &b) in pattern[..m - 1].iter().enumerate() {
        skip[b as usize] = m - 1 - i;
    }
    let mut end = m - 1;
    while end < n {
        let start = end + 1 - m;
        if &text[start..=end] == pattern {
            occurrences.push(Occurrence { start });
        }
        end += skip[text[end] as usize];
    }
    Ok(occurrences)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn starts(occ: &[Occurrence]) -> Vec<usize> {
        occ.iter().map(|o| o.start).collect()
    }

    /// Second, independently written scan: explicit index loops, no slice
    /// comparison or iterator machinery.
    fn reference_scan(pattern: &[u8], text: &[u8]) -> Vec<usize> {
        let mut found = Vec::new();
        if pattern.is_empty() || text.len() < pattern.len() {
            return found;
        }
        let mut i = 0;
        while i + pattern.len() <= text.len() {
            let mut k = 0;
            while k < pattern.len() && text[i + k] == pattern[k] {
                k += 1;
            }
            if k == pattern.len() {
                found.push(i);
            }
            i += 1;
        }
        found
    }

    #[test]
    fn fixed_cases() {
        assert_eq!(
            starts(&naive_search(b"aa", b"aaaa").unwrap()),
            vec![0, 1, 2]
        );
        assert_eq!(
            starts(&horspool_search(b"aa", b"aaaa").unwrap()),
            vec![0, 1, 2]
        );
        assert!(naive_search(b"abc", b"zzzz").unwrap().is_empty());
        assert!(horspool_search(b"abc", b"zzzz").unwrap().is_empty());
        assert!(naive_search(b"abc", b"ab").unwrap().is_empty());
        assert!(matches!(
            naive_search(b"", b"xyz"),
            Err(Error::EmptyPattern)
        ));
        assert!(matches!(
            horspool_search(b"", b"xyz"),
            Err(Error::EmptyPattern)
        ));
    }

    #[test]
    fn identifiers_round_trip() {
        for algo in BaselineAlgo::ALL {
            assert_eq!(BaselineAlgo::from_identifier(algo.identifier()), Some(algo));
        }
        assert_eq!(BaselineAlgo::from_identifier("hc"), None);
    }

    #[test]
    fn baselines_agree_with_the_reference_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for trial in 0..2000 {
            let sigma = [2u16, 4, 20, 64, 256][trial % 5];
            let m = rng.random_range(1..=16usize);
            let n = rng.random_range(0..400usize);
            let mut text: Vec<u8> = (0..n).map(|_| rng.random_range(0..sigma) as u8).collect();
            let pattern: Vec<u8> = (0..m).map(|_| rng.random_range(0..sigma) as u8).collect();
            if n >= m && rng.random_range(0..2) == 0 {
                let at = rng.random_range(0..=n - m);
                text[at..at + m].copy_from_slice(&pattern);
            }
            let expected = reference_scan(&pattern, &text);
            assert_eq!(starts(&naive_search(&pattern, &text).unwrap()), expected);
            assert_eq!(starts(&horspool_search(&pattern, &text).unwrap()), expected);
        }
    }
}
