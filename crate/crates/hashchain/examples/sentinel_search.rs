//! The sentinel variant: give the searcher a buffer with slack after the
//! text and its skip loop drops the per-window position check.
//!
//!     cargo run --example sentinel_search

use hashchain::{search_shc, CompiledPattern, SearchBuffer};

fn main() -> hashchain::Result<()> {
    let text: Vec<u8> = std::iter::repeat_n(b"gattacagattaca".as_slice(), 40)
        .flatten()
        .copied()
        .collect();
    let pattern = b"cagatt";

    // the slack must hold the largest pattern searched with this buffer
    let mut buffer = SearchBuffer::with_slack(&text, pattern.len());
    println!(
        "buffer: {} text bytes + {} slack = {} capacity",
        buffer.len(),
        buffer.capacity() - buffer.len(),
        buffer.capacity()
    );

    let compiled = CompiledPattern::compile(pattern, 3, 11)?;
    let (occurrences, metrics) = search_shc(&compiled, &mut buffer)?;

    println!(
        "{} occurrences, first at {:?}, last at {:?}",
        occurrences.len(),
        occurrences.first().map(|o| o.start),
        occurrences.last().map(|o| o.start),
    );
    println!(
        "windows probed: {} (skip loop may probe into the sentinel, never past it)",
        metrics.windows
    );

    // the text region is untouched; only the slack was written
    assert_eq!(buffer.text(), &text[..]);
    println!("text region unchanged after the search");
    Ok(())
}
