use std::io;
use std::path::PathBuf;

/// Errors reported by compilation, searching, and the bench harness.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("pattern is empty")]
    EmptyPattern,

    #[error("pattern too short: q-gram length {q} exceeds pattern length {m}")]
    PatternTooShort { q: usize, m: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("search buffer too small: need {needed} bytes of backing storage, have {capacity}")]
    BufferTooSmall { needed: usize, capacity: usize },

    #[error("cannot read corpus {path}: {source}")]
    CorpusIo {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("corpus {path} is empty")]
    EmptyCorpus { path: PathBuf },

    #[error("unknown report format {0:?} (expected \"tsv\" or \"md\")")]
    UnknownFormat(String),

    #[error("unknown algorithm {0:?} (expected hc, shc, naive or horspool)")]
    UnknownAlgorithm(String),

    #[error("occurrence counts disagree: {0}")]
    CountMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
