//! Exact online string matching through linked q-gram filters.
//!
//! A pattern is compiled into a small bit-vector index: every q-gram hashes
//! to a word, and each word records which q-grams immediately precede it in
//! the pattern, one bit per link. Searching reads non-overlapping q-grams
//! backward from the end of a text window. An empty word, or a missing link
//! bit between two q-grams, proves the window cannot contain the pattern and
//! allows a shift of up to `m - q + 1` positions, so on typical inputs most
//! of the text is never read.
//!
//! Two searchers share the compiled pattern: [`search_hc`] works on any
//! `&[u8]`, while [`search_shc`] additionally copies the pattern into the
//! slack of a [`SearchBuffer`] just past the text, which lets its skip loop
//! drop the position check. Both report every occurrence, verified byte for
//! byte, in ascending order.
//!
//! ```
//! use hashchain::{search_hc, CompiledPattern};
//!
//! let cp = CompiledPattern::compile(b"needle", 3, 10)?;
//! let (found, metrics) = search_hc(&cp, b"a haystack with a needle in it");
//! assert_eq!(found[0].start, 18);
//! assert!(metrics.qgram_hashes > 0);
//! # Ok::<(), hashchain::Error>(())
//! ```
//!
//! The [`baselines`] module holds a naive oracle and a Horspool reference,
//! [`bench`] reproduces the timing protocol at desk scale, and [`selftest`]
//! runs randomized differential trials of everything against the oracle.

pub mod baselines;
pub mod bench;
pub mod cli;
pub mod selftest;

mod chains;
mod error;
mod hash;
mod params;
mod pattern;
mod search;

pub use chains::{enumerate_chains, Chain};
pub use error::{Error, Result};
pub use hash::{hash_qgram, link_hash};
pub use params::{derive_shift, HcParams, DEFAULT_ALPHA, DEFAULT_Q, MAX_ALPHA, NATIVE_WORD_BITS};
pub use pattern::{CompiledPattern, FilterTable};
pub use search::{search_hc, search_shc, Occurrence, SearchBuffer, SearchMetrics};
