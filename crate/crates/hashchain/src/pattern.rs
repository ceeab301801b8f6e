//! Pattern preprocessing: building the filter table that indexes the
//! pattern's q-grams and the links between adjacent ones.

use crate::error::{Error, Result};
use crate::hash::{hash_qgram, link_hash};
use crate::params::HcParams;

/// The weak-factor index: `2^alpha` words addressed by q-gram hash.
///
/// A nonzero word means some pattern q-gram hashes to that slot; the set bits
/// are the link hashes of the q-grams that immediately precede it in the
/// pattern. A zero word proves the probed text q-gram is not a pattern
/// factor, which is what the search's skip loop exploits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterTable {
    words: Box<[u64]>,
}

impl FilterTable {
    fn zeroed(alpha: u32) -> Self {
        Self {
            words: vec![0u64; 1usize << alpha].into_boxed_slice(),
        }
    }

    /// The word addressed by hash value `v`.
    #[inline]
    pub fn word(&self, v: u64) -> u64 {
        self.words[v as usize]
    }

    /// Number of words (always `2^alpha`).
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// All words, in hash order.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Total set bits across the table. Bounded by `m - q + 1` after
    /// compiling a pattern of length `m`.
    pub fn count_set_bits(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }
}

/// A pattern compiled for searching: the pattern bytes, the parameters, the
/// populated filter table, and the chain-head hash that gates verification.
///
/// Immutable once built; cheap to share across threads and searches.
#[derive(Debug, Clone)]
pub struct CompiledPattern {
    pattern: Box<[u8]>,
    params: HcParams,
    table: FilterTable,
    chain_head_hash: u64,
}

impl CompiledPattern {
    /// Compiles `pattern` with the given q-gram length and table exponent,
    /// using the native filter word width.
    pub fn compile(pattern: &[u8], q: usize, alpha: u32) -> Result<Self> {
        Self::compile_with(pattern, HcParams::new(q, alpha)?)
    }

    /// Compiles `pattern` with fully explicit parameters.
    pub fn compile_with(pattern: &[u8], params: HcParams) -> Result<Self> {
        Self::compile_counted(pattern, params).map(|(cp, _)| cp)
    }

    /// As [`CompiledPattern::compile_with`], also reporting how many q-gram
    /// hash evaluations preprocessing performed: one per q-gram processed in
    /// chain order, plus the re-hash of the first q-grams.
    pub(crate) fn compile_counted(pattern: &[u8], params: HcParams) -> Result<(Self, usize)> {
        let m = pattern.len();
        if m == 0 {
            return Err(Error::EmptyPattern);
        }
        let q = params.q();
        if q > m {
            return Err(Error::PatternTooShort { q, m });
        }
        let (s, mask, w) = (params.shift(), params.mask(), params.word_bits());
        let mut table = FilterTable::zeroed(params.alpha());
        let mut hashes = 0usize;

        // Process each chain backward from its final q-gram, linking every
        // adjacent pair F[h(later)] |= link(h(earlier)). Chains are visited
        // in order of decreasing distance from the pattern end so that the
        // chain ending at m - 1 comes last and leaves its earliest q-gram's
        // hash behind as the chain head.
        let chain_count = q.min(m - q + 1);
        let mut chain_head_hash = 0u64;
        for i in (1..=chain_count).rev() {
            let mut end = m - i;
            let mut v = hash_qgram(pattern, end, q, s, mask);
            hashes += 1;
            while end >= 2 * q - 1 {
                end -= q;
                let later = v;
                v = hash_qgram(pattern, end, q, s, mask);
                hashes += 1;
                table.words[later as usize] |= link_hash(v, w);
            }
            chain_head_hash = v;
        }

        // The first q-grams have no predecessor to link from; mark their
        // words non-empty only where collisions have not done it already.
        for end in (q - 1)..(q - 1 + chain_count) {
            let v = hash_qgram(pattern, end, q, s, mask);
            hashes += 1;
            let word = &mut table.words[v as usize];
            if *word == 0 {
                *word = 1;
            }
        }

        Ok((
            Self {
                pattern: pattern.into(),
                params,
                table,
                chain_head_hash,
            },
            hashes,
        ))
    }

    /// The pattern bytes.
    #[inline]
    pub fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    /// Pattern length `m`.
    #[inline]
    pub fn len(&self) -> usize {
        self.pattern.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn params(&self) -> &HcParams {
        &self.params
    }

    #[inline]
    pub fn table(&self) -> &FilterTable {
        &self.table
    }

    /// Hash of the earliest q-gram in the chain ending at the last pattern
    /// position. A fully scanned window can only contain the pattern if its
    /// final walk hash equals this value, so verification is skipped when it
    /// does not.
    #[inline]
    pub fn chain_head_hash(&self) -> u64 {
        self.chain_head_hash
    }
}
