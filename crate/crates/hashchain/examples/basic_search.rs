//! Compile a pattern once, search a text, print every match offset.
//!
//!     cargo run --example basic_search

use hashchain::{search_hc, CompiledPattern};

fn main() -> hashchain::Result<()> {
    let text = b"the cat sat on the mat, the bat sat on the cat".as_slice();
    let pattern = b"at";

    // q = 2 suits a two-byte pattern; alpha = 10 gives a 1024-word filter
    let compiled = CompiledPattern::compile(pattern, 2, 10)?;
    let (occurrences, metrics) = search_hc(&compiled, text);

    println!("pattern {:?} in {:?}", "at", String::from_utf8_lossy(text));
    for occ in &occurrences {
        println!("  match at byte {}", occ.start);
    }
    println!(
        "{} matches; {} windows probed, {} q-gram hashes over {} bytes",
        occurrences.len(),
        metrics.windows,
        metrics.qgram_hashes,
        text.len()
    );
    Ok(())
}
