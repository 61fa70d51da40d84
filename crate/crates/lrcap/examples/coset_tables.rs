//! Coset weight tables of small local codes, and the per-symbol mutual
//! information they induce on a BSC — cross-checked against the closed
//! forms the capacity module uses.
//!
//! Each row of a table counts, per Hamming weight, the words of one coset
//! of the local code. Weighting those counts by p^w (1-p)^(n-w) gives the
//! probability that a block lands in that coset, and the entropy of that
//! distribution is exactly what the block's parity constraints leak.

use lrcap::blockstats::{bsc_block_mi, hamming_rho3_bsc_mi, local_code_bsc_mi};
use lrcap::codes::{coset_weight_table, hamming_code, single_parity_code};
use lrcap::infofn::Probability;

fn main() {
    let p = Probability::new(0.1).unwrap();

    for r in [2, 3] {
        let code = single_parity_code(r);
        let table = coset_weight_table(&code).unwrap();
        println!("single parity, r = {r} ({} cosets):", table.num_cosets());
        for i in 0..table.num_cosets() {
            println!("  coset {i}: {:?}", table.counts(i));
        }
        let coset = local_code_bsc_mi(&code, p).unwrap();
        let closed = bsc_block_mi(p, r);
        println!("  MI at p = 0.1: {coset:.12} (closed form {closed:.12})");
        println!();
    }

    let code = hamming_code(3).unwrap();
    let table = coset_weight_table(&code).unwrap();
    println!("Hamming [7,4] ({} cosets):", table.num_cosets());
    for i in 0..table.num_cosets() {
        println!("  coset {i}: {:?}", table.counts(i));
    }
    let coset = local_code_bsc_mi(&code, p).unwrap();
    let closed = hamming_rho3_bsc_mi(p, 6).unwrap();
    println!("  MI at p = 0.1: {coset:.12} (closed form {closed:.12})");
}
