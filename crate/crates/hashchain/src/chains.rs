//! Grouping of a pattern's q-grams into chains: maximal runs of
//! non-overlapping q-grams stepping backward by q from a fixed end position.

use crate::error::{Error, Result};

/// One q-gram chain of a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    /// Index of the last byte of the chain's final q-gram.
    pub end: usize,
    /// Start indices of the chain's q-grams, ascending.
    pub starts: Vec<usize>,
}

impl Chain {
    /// Number of q-grams in the chain.
    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }
}

/// Enumerates the chains of a pattern of length `m`, one per end position
/// that admits at least one q-gram, ordered by end position. The last chain
/// ends at `m - 1`; its earliest q-gram supplies the chain-head hash.
///
/// There are `min(q, m - q + 1)` chains and their sizes sum to `m - q + 1`,
/// one entry per q-gram of the pattern.
pub fn enumerate_chains(m: usize, q: usize) -> Result<Vec<Chain>> {
    if q == 0 {
        return Err(Error::InvalidParams("q must be at least 1".into()));
    }
    if q > m {
        return Err(Error::PatternTooShort { q, m });
    }
    let count = q.min(m - q + 1);
    let mut chains = Vec::with_capacity(count);
    for end in (m - count)..m {
        let mut starts = Vec::with_capacity((end + 1) / q);
        let mut gram_end = end;
        loop {
            starts.push(gram_end + 1 - q);
            if gram_end < 2 * q - 1 {
                break;
            }
            gram_end -= q;
        }
        starts.reverse();
        chains.push(Chain { end, starts });
    }
    Ok(chains)
}
