//! Look inside preprocessing: the q-gram chains of a pattern, the filter
//! words they populate, and the chain-head hash that gates verification.
//!
//!     cargo run --example inspect_pattern

use hashchain::{enumerate_chains, CompiledPattern, HcParams};

fn main() -> hashchain::Result<()> {
    let pattern = b"acgtgtacgctgcaca";
    let (q, alpha) = (4usize, 4u32);
    let params = HcParams::with_word_width(q, alpha, 8)?;

    println!(
        "pattern {:?}, q={q}, alpha={alpha} ({} filter words of {} bits), shift s={}",
        String::from_utf8_lossy(pattern),
        params.table_len(),
        params.word_bits(),
        params.shift()
    );

    println!("\nchains (each steps backward by q from its end position):");
    for chain in enumerate_chains(pattern.len(), q)? {
        let grams: Vec<String> = chain
            .starts
            .iter()
            .map(|&s| String::from_utf8_lossy(&pattern[s..s + q]).into_owned())
            .collect();
        println!(
            "  ends at {:2}: {}  (starts {:?})",
            chain.end,
            grams.join(" -> "),
            chain.starts
        );
    }

    let compiled = CompiledPattern::compile_with(pattern, params)?;
    println!("\nnonzero filter words (index: bits):");
    for (index, &word) in compiled.table().words().iter().enumerate() {
        if word != 0 {
            println!("  F[{index:2}] = {word:08b}");
        }
    }
    println!(
        "\n{} bits set across {} words (at most m - q + 1 = {})",
        compiled.table().count_set_bits(),
        compiled.table().len(),
        pattern.len() - q + 1
    );
    println!("chain-head hash H_v = {}", compiled.chain_head_hash());
    Ok(())
}
