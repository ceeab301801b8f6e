//! The two hash functions behind the filter table: a shift-then-add q-gram
//! hash selecting a word, and a link hash selecting a single bit inside it.

/// Hashes the q-gram of `bytes` ending at index `end` (inclusive).
///
/// Characters are folded from `end` down to `end - q + 1` as
/// `v = (v << s) + byte`, and the result is reduced with `mask`, so it always
/// lies in `0..=mask`. Bytes are used raw; there is no alphabet mapping.
///
/// Positions are a caller contract: `end` must be at least `q - 1` and less
/// than `bytes.len()`. Violations are caught by debug assertions (and by the
/// slice bounds check).
#[inline]
pub fn hash_qgram(bytes: &[u8], end: usize, q: usize, s: u32, mask: u64) -> u64 {
    debug_assert!(q >= 1);
    debug_assert!(end + 1 >= q, "q-gram ending at {end} would start before 0");
    debug_assert!(
        end < bytes.len(),
        "q-gram end {end} past length {}",
        bytes.len()
    );
    let mut v = 0u64;
    for &b in bytes[end + 1 - q..=end].iter().rev() {
        v = (v << s).wrapping_add(u64::from(b));
    }
    v & mask
}

/// Maps a hash value to a filter word with exactly one bit set:
/// `1 << (v mod w)`. `w` must be a power of two.
#[inline]
pub fn link_hash(v: u64, w: u32) -> u64 {
    1u64 << (v & u64::from(w - 1))
}
