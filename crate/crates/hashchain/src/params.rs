use crate::error::{Error, Result};

/// Default q-gram length.
pub const DEFAULT_Q: usize = 4;

/// Default filter-table exponent.
pub const DEFAULT_ALPHA: u32 = 12;

/// Largest supported table exponent; keeps the filter at most 2^30 words.
pub const MAX_ALPHA: u32 = 30;

/// Filter word width used unless one is given explicitly: the platform's
/// natural word, never less than 32 bits.
pub const NATIVE_WORD_BITS: u32 = if usize::BITS < 32 { 32 } else { usize::BITS };

/// Search parameters derived from a q-gram length and a table exponent.
///
/// `shift` and `mask` are fixed by `alpha` and `q`; they are stored so the
/// inner loops never recompute them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HcParams {
    q: usize,
    alpha: u32,
    shift: u32,
    mask: u64,
    word_bits: u32,
}

impl HcParams {
    /// Validates `q` and `alpha` and derives the shift and mask, using the
    /// native filter word width.
    pub fn new(q: usize, alpha: u32) -> Result<Self> {
        Self::with_word_width(q, alpha, NATIVE_WORD_BITS)
    }

    /// As [`HcParams::new`] with an explicit word width, which must be a
    /// power of two in `8..=64`.
    pub fn with_word_width(q: usize, alpha: u32, word_bits: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidParams("q must be at least 1".into()));
        }
        if alpha == 0 || alpha > MAX_ALPHA {
            return Err(Error::InvalidParams(format!(
                "alpha must be in 1..={MAX_ALPHA}, got {alpha}"
            )));
        }
        if !word_bits.is_power_of_two() || !(8..=64).contains(&word_bits) {
            return Err(Error::InvalidParams(format!(
                "word width must be a power of two in 8..=64, got {word_bits}"
            )));
        }
        Ok(Self {
            q,
            alpha,
            shift: derive_shift(alpha, q),
            mask: (1u64 << alpha) - 1,
            word_bits,
        })
    }

    /// q-gram length.
    #[inline]
    pub fn q(&self) -> usize {
        self.q
    }

    /// Table exponent: the filter holds `2^alpha` words.
    #[inline]
    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    /// Per-character left shift applied by the q-gram hash.
    #[inline]
    pub fn shift(&self) -> u32 {
        self.shift
    }

    /// `2^alpha - 1`, the reduction mask for hash values.
    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Bits per filter word.
    #[inline]
    pub fn word_bits(&self) -> u32 {
        self.word_bits
    }

    /// Number of words in the filter table.
    #[inline]
    pub fn table_len(&self) -> usize {
        1usize << self.alpha
    }
}

/// The per-character shift `⌊alpha / q⌋`: the widest step that keeps q
/// characters inside an alpha-bit hash.
#[inline]
pub fn derive_shift(alpha: u32, q: usize) -> u32 {
    (alpha as usize / q) as u32
}
