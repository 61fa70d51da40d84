//! Counter-based derivation of per-trial / per-group RNG substreams.
//!
//! Every randomized routine in this crate takes one explicit 64-bit seed and
//! derives independent substreams from `(seed, tag, counter…)` so that results
//! do not depend on evaluation order or thread count.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

// Domain separation tags, one per randomized purpose. Never reuse a value.
pub const GENERATOR_COLUMNS: u64 = 1;
pub const CODEWORD_SAMPLE: u64 = 2;
pub const RANDOM_CODE: u64 = 3;
pub const ERASURE: u64 = 4;
pub const RANK_TRIAL: u64 = 5;
pub const KEEP_MASK: u64 = 6;
#[allow(dead_code)] // drawn on only from test harnesses
pub const MESSAGE: u64 = 7;
#[allow(dead_code)]
pub const NOISE: u64 = 8;
pub const UNIFORM_SAMPLES: u64 = 9;

/// SplitMix64 finalizer; full-period bijection on u64.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Collapses `(seed, parts…)` into a single substream seed.
pub fn derive(seed: u64, parts: &[u64]) -> u64 {
    let mut state = mix(seed);
    for &p in parts {
        state = mix(state ^ p);
    }
    state
}

/// A fresh generator for the substream addressed by `(seed, parts…)`.
pub fn substream(seed: u64, parts: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive(seed, parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngCore;

    #[test]
    fn substreams_are_reproducible() {
        let mut a = substream(7, &[1, 2]);
        let mut b = substream(7, &[1, 2]);
        for _ in 0..16 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn substreams_differ_across_counters() {
        let mut seen = std::collections::HashSet::new();
        for trial in 0..100u64 {
            for group in 0..10u64 {
                assert!(seen.insert(derive(7, &[group, trial])));
            }
        }
        // Different base seeds must not collide either.
        assert_ne!(derive(7, &[0, 0]), derive(8, &[0, 0]));
    }
}
