//! Maximum-likelihood decoding of tiny locality-2 codes on a BSC: block
//! error rate against rate, for codebooks small enough to enumerate.
//! Lower rate buys distance, and the error rate falls accordingly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lrcap::codes::linear_lrc_generator;
use lrcap::experiments::{bsc_ml_decode_tiny, bsc_transmit};
use lrcap::infofn::Probability;

fn main() {
    let n = 12;
    let p = Probability::new(0.08).unwrap();
    let trials = 2000;

    println!("n = {n}, r = 2, BSC flip probability {}, {trials} trials per code", p.get());
    for k in [8, 6, 4] {
        let g = linear_lrc_generator(n, k, 2, 17).unwrap();
        let codebook: Vec<_> = g.enumerate_span().unwrap().collect();

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut errors = 0;
        for _ in 0..trials {
            let sent = rng.gen_range(0..codebook.len());
            let received = bsc_transmit(&codebook[sent], p, &mut rng);
            let decoded = bsc_ml_decode_tiny(&codebook, &received).unwrap();
            if codebook[decoded] != codebook[sent] {
                errors += 1;
            }
        }
        // Random rows can be dependent, so report the realized rate.
        let rate = (codebook.len() as f64).log2() / n as f64;
        println!(
            "  k = {k}: rate {rate:.3}, {} codewords, block error rate {:.4}",
            codebook.len(),
            errors as f64 / trials as f64
        );
    }
}
