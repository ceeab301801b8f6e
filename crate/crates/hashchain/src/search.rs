//! The search phase: windows slide along the text and non-overlapping
//! q-grams are read backward from each window end, shifting past the window
//! as soon as a q-gram (or the link between two of them) is absent from the
//! pattern's filter table.

use crate::error::{Error, Result};
use crate::hash::{hash_qgram, link_hash};
use crate::pattern::CompiledPattern;

/// A verified match: the text index where the pattern begins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence {
    pub start: usize,
}

/// Work counters recorded by one search call.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct SearchMetrics {
    /// Window alignments attempted: one per end-of-window hash probe.
    pub windows: u64,
    /// q-gram hash evaluations, including the window probes.
    pub qgram_hashes: u64,
    /// Link-bit tests performed during backward chain walks.
    pub link_checks: u64,
    /// Full pattern comparisons performed.
    pub verifications: u64,
    /// Fully scanned windows rejected by the chain-head hash instead of a
    /// full comparison.
    pub hv_rejections: u64,
}

/// Text storage with slack after the logical text, so the sentinel variant
/// can copy the pattern just past the end without touching the text itself.
#[derive(Debug, Clone)]
pub struct SearchBuffer {
    data: Vec<u8>,
    n: usize,
}

impl SearchBuffer {
    /// Copies `text` into fresh storage with `slack` spare bytes after it.
    /// The slack must be at least the length of the largest pattern that
    /// will be searched with [`search_shc`].
    pub fn with_slack(text: &[u8], slack: usize) -> Self {
        Self::from_vec(text.to_vec(), slack)
    }

    /// Takes ownership of `text` and grows it by `slack` spare bytes.
    pub fn from_vec(mut text: Vec<u8>, slack: usize) -> Self {
        let n = text.len();
        text.resize(n + slack, 0);
        Self { data: text, n }
    }

    /// Logical text length `n`.
    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Total backing storage, text plus slack.
    pub fn capacity(&self) -> usize {
        self.data.len()
    }

    /// The logical text. Never mutated by any search.
    pub fn text(&self) -> &[u8] {
        &self.data[..self.n]
    }

    /// Writes `pattern` into the slack `[n, n + m)`; fails without writing
    /// if the storage cannot hold it.
    fn write_sentinel(&mut self, pattern: &[u8]) -> Result<()> {
        let needed = self.n + pattern.len();
        if self.data.len() < needed {
            return Err(Error::BufferTooSmall {
                needed,
                capacity: self.data.len(),
            });
        }
        self.data[self.n..needed].copy_from_slice(pattern);
        Ok(())
    }
}

/// Walks the chain of q-grams backward from `window_end`, given the hash `v`
/// and filter word `z` already probed there. Verifies and reports the window
/// when the walk reaches the window start without a failed link check.
///
/// Returns the cursor the caller shifts from: the position of the failed
/// q-gram on a break, or one q left of the walk floor on completion (which
/// advances the window end by exactly one).
#[inline]
fn walk_window(
    cp: &CompiledPattern,
    data: &[u8],
    window_end: usize,
    mut v: u64,
    mut z: u64,
    occurrences: &mut Vec<Occurrence>,
    metrics: &mut SearchMetrics,
) -> usize {
    let pattern = cp.pattern();
    let m = pattern.len();
    let params = cp.params();
    let (q, s, mask, w) = (
        params.q(),
        params.shift(),
        params.mask(),
        params.word_bits(),
    );

    // The walk keeps stepping while the cursor is at or above this floor;
    // with m < 2q it exceeds the window end and the walk body never runs.
    let floor = window_end + 2 * q - m;
    let mut pos = window_end;
    while pos >= floor {
        pos -= q;
        v = hash_qgram(data, pos, q, s, mask);
        metrics.qgram_hashes += 1;
        metrics.link_checks += 1;
        if z & link_hash(v, w) == 0 {
            // the two q-grams are not adjacent anywhere in the pattern:
            // shift from the failed position
            return pos;
        }
        z = cp.table().word(v);
    }

    // Fully scanned window. Only a window whose last walk hash equals the
    // chain head can contain the pattern; everything else is rejected
    // without comparing bytes.
    let start = window_end + 1 - m;
    if v == cp.chain_head_hash() {
        metrics.verifications += 1;
        if &data[start..start + m] == pattern {
            occurrences.push(Occurrence { start });
        }
    } else {
        metrics.hv_rejections += 1;
    }
    // advance the window end by exactly one
    floor - q
}

/// Finds every occurrence of the compiled pattern in `text`, ascending,
/// together with the work counters of the run.
///
/// Overlapping occurrences are all reported. A text shorter than the pattern
/// yields an empty result.
pub fn search_hc(cp: &CompiledPattern, text: &[u8]) -> (Vec<Occurrence>, SearchMetrics) {
    let mut occurrences = Vec::new();
    let mut metrics = SearchMetrics::default();
    let m = cp.len();
    let n = text.len();
    if n < m {
        return (occurrences, metrics);
    }
    let params = cp.params();
    let (q, s, mask) = (params.q(), params.shift(), params.mask());
    let shift = m - q + 1;

    let mut j = m - 1;
    while j < n {
        metrics.windows += 1;
        metrics.qgram_hashes += 1;
        let v = hash_qgram(text, j, q, s, mask);
        let z = cp.table().word(v);
        if z != 0 {
            j = walk_window(cp, text, j, v, z, &mut occurrences, &mut metrics);
        }
        j += shift;
    }
    (occurrences, metrics)
}

/// Sentinel variant of [`search_hc`]: copies the pattern into the buffer's
/// slack just past the text, letting the skip loop run without a position
/// check until it lands on a non-empty filter word.
///
/// Returns exactly the occurrences within the logical text, identical as a
/// set to [`search_hc`] on the same text. The text region of the buffer is
/// unchanged on return; only the slack is written.
pub fn search_shc(
    cp: &CompiledPattern,
    buffer: &mut SearchBuffer,
) -> Result<(Vec<Occurrence>, SearchMetrics)> {
    let mut occurrences = Vec::new();
    let mut metrics = SearchMetrics::default();
    buffer.write_sentinel(cp.pattern())?;
    let m = cp.len();
    let n = buffer.len();
    if n < m {
        return Ok((occurrences, metrics));
    }
    let params = cp.params();
    let (q, s, mask) = (params.q(), params.shift(), params.mask());
    let shift = m - q + 1;
    let data = &buffer.data;

    let mut j = m - 1;
    while j < n {
        // Skip loop with no position check: the sentinel guarantees a
        // non-empty word at or before n + m - 1, because every stretch of
        // m - q + 1 positions past n - 1 contains a q-gram that lies fully
        // inside the pattern copy.
        metrics.windows += 1;
        metrics.qgram_hashes += 1;
        let mut v = hash_qgram(data, j, q, s, mask);
        let mut z = cp.table().word(v);
        while z == 0 {
            j += shift;
            metrics.windows += 1;
            metrics.qgram_hashes += 1;
            v = hash_qgram(data, j, q, s, mask);
            z = cp.table().word(v);
        }
        if j >= n {
            break;
        }
        j = walk_window(cp, data, j, v, z, &mut occurrences, &mut metrics);
        j += shift;
    }
    Ok((occurrences, metrics))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselines::naive_search;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn starts(occ: &[Occurrence]) -> Vec<usize> {
        occ.iter().map(|o| o.start).collect()
    }

    fn hc(pattern: &[u8], text: &[u8], q: usize, alpha: u32) -> (Vec<usize>, SearchMetrics) {
        let cp = CompiledPattern::compile(pattern, q, alpha).unwrap();
        let (occ, metrics) = search_hc(&cp, text);
        (starts(&occ), metrics)
    }

    fn shc(pattern: &[u8], text: &[u8], q: usize, alpha: u32) -> (Vec<usize>, SearchMetrics) {
        let cp = CompiledPattern::compile(pattern, q, alpha).unwrap();
        let mut buffer = SearchBuffer::with_slack(text, pattern.len());
        let (occ, metrics) = search_shc(&cp, &mut buffer).unwrap();
        assert_eq!(buffer.text(), text, "text region must be unchanged");
        (starts(&occ), metrics)
    }

    #[test]
    fn overlapping_matches_are_all_reported() {
        assert_eq!(hc(b"aa", b"aaaa", 2, 8).0, vec![0, 1, 2]);
        assert_eq!(shc(b"aa", b"aaaa", 2, 8).0, vec![0, 1, 2]);
    }

    #[test]
    fn short_or_empty_text_yields_empty_result() {
        assert_eq!(hc(b"abcd", b"abc", 2, 8).0, Vec::<usize>::new());
        assert_eq!(hc(b"abcd", b"", 2, 8).0, Vec::<usize>::new());
        assert_eq!(shc(b"abcd", b"abc", 2, 8).0, Vec::<usize>::new());
        assert_eq!(shc(b"abcd", b"", 2, 8).0, Vec::<usize>::new());
    }

    #[test]
    fn embedded_patterns_match_the_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let pattern = b"acgtgtacgctgcaca";
        let mut text: Vec<u8> = (0..10_000).map(|_| rng.random_range(b'a'..=b'd')).collect();
        for &at in &[0usize, 137, 4096, 9984] {
            text[at..at + pattern.len()].copy_from_slice(pattern);
        }
        let expected = starts(&naive_search(pattern, &text).unwrap());
        assert!(expected.len() >= 4);
        assert_eq!(hc(pattern, &text, 4, 8).0, expected);
        assert_eq!(shc(pattern, &text, 4, 8).0, expected);
    }

    #[test]
    fn mismatching_alphabets_take_the_fast_path_with_closed_form_window_count() {
        let (m, n, q, alpha) = (9usize, 1000usize, 3usize, 8u32);
        let pattern = vec![b'b'; m];
        let text = vec![b'a'; n];
        let cp = CompiledPattern::compile(&pattern, q, alpha).unwrap();
        // the probe word must be empty or the closed form does not apply
        let params = *cp.params();
        let probe = crate::hash::hash_qgram(&text, q - 1, q, params.shift(), params.mask());
        assert_eq!(cp.table().word(probe), 0);

        let (occ, metrics) = search_hc(&cp, &text);
        assert!(occ.is_empty());
        let shift = m - q + 1;
        let expected_windows = (n - m + 1).div_ceil(shift) as u64;
        assert_eq!(metrics.windows, expected_windows);
        assert_eq!(metrics.qgram_hashes, expected_windows);
        assert_eq!(metrics.link_checks, 0);
        assert_eq!(metrics.verifications, 0);
    }

    #[test]
    fn full_window_work_is_floor_m_over_q() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for (m, q) in [(13, 3), (16, 4), (7, 4), (5, 5), (12, 1)] {
            let pattern: Vec<u8> = (0..m).map(|_| rng.random_range(0..4u8)).collect();
            let (found, metrics) = hc(&pattern, &pattern, q, 10);
            assert_eq!(found, vec![0]);
            assert_eq!(metrics.windows, 1);
            assert_eq!(metrics.qgram_hashes, (m / q) as u64, "m={m} q={q}");
        }
    }

    #[test]
    fn boundary_occurrence_is_reported_once_by_shc() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut text: Vec<u8> = (0..512).map(|_| rng.random_range(0..4u8)).collect();
        let pattern: Vec<u8> = (0..24).map(|_| rng.random_range(0..4u8)).collect();
        let n = text.len();
        text[n - pattern.len()..].copy_from_slice(&pattern);
        let expected = starts(&naive_search(&pattern, &text).unwrap());
        assert!(expected.contains(&(n - pattern.len())));
        assert_eq!(shc(&pattern, &text, 4, 9).0, expected);
    }

    #[test]
    fn absent_pattern_lands_in_the_sentinel_and_reports_nothing() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let text: Vec<u8> = (0..4096).map(|_| rng.random_range(0..4u8)).collect();
        // bytes outside the text alphabet cannot occur
        let pattern = vec![b'z'; 16];
        assert!(naive_search(&pattern, &text).unwrap().is_empty());
        assert_eq!(shc(&pattern, &text, 4, 10).0, Vec::<usize>::new());
    }

    #[test]
    fn shc_requires_enough_slack() {
        let cp = CompiledPattern::compile(b"abcd", 2, 8).unwrap();
        let mut buffer = SearchBuffer::with_slack(b"abcdabcd", 3);
        match search_shc(&cp, &mut buffer) {
            Err(Error::BufferTooSmall { needed, capacity }) => {
                assert_eq!(needed, 12);
                assert_eq!(capacity, 11);
            }
            other => panic!("expected BufferTooSmall, got {other:?}"),
        }
        // nothing was written
        assert_eq!(buffer.text(), b"abcdabcd");
    }

    #[test]
    fn degenerate_window_sizes_agree_with_the_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for (m, q) in [(5usize, 3usize), (7, 4), (4, 4), (9, 5), (6, 1)] {
            for _ in 0..40 {
                let n = rng.random_range(m..400);
                let mut text: Vec<u8> = (0..n).map(|_| rng.random_range(0..3u8)).collect();
                let pattern: Vec<u8> = (0..m).map(|_| rng.random_range(0..3u8)).collect();
                if rng.random_range(0..2) == 0 {
                    let at = rng.random_range(0..=n - m);
                    text[at..at + m].copy_from_slice(&pattern);
                }
                let expected = starts(&naive_search(&pattern, &text).unwrap());
                assert_eq!(hc(&pattern, &text, q, 8).0, expected, "m={m} q={q}");
                assert_eq!(shc(&pattern, &text, q, 8).0, expected, "m={m} q={q}");
            }
        }
    }

    #[test]
    fn metrics_invariants_hold_on_random_trials() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..200 {
            let q = rng.random_range(1..=6usize);
            let m = rng.random_range(q..=48);
            let n = rng.random_range(m..4000);
            let sigma = [2u16, 4, 20, 256][rng.random_range(0..4)];
            let text: Vec<u8> = (0..n).map(|_| rng.random_range(0..sigma) as u8).collect();
            let pattern: Vec<u8> = (0..m).map(|_| rng.random_range(0..sigma) as u8).collect();
            let (_, metrics) = hc(&pattern, &text, q, 8);
            assert!(metrics.qgram_hashes >= metrics.windows);
            assert!(metrics.verifications <= metrics.windows);
            assert!(metrics.verifications + metrics.hv_rejections <= metrics.windows);
            // every advance is >= 1 and <= m - q + 1 positions of the window end
            let max_windows = (n - m + 1) as u64;
            let min_windows = (n - m + 1).div_ceil(m - q + 1) as u64;
            assert!(metrics.windows >= min_windows && metrics.windows <= max_windows);
        }
    }
}
