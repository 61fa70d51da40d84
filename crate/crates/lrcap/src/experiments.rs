//! Seeded Monte Carlo experiments.
//!
//! Three probabilistic claims get checked at desk scale: the expected count
//! of coordinates recoverable without repair after erasure, the rank of a
//! randomly kept column set of a random locality-respecting generator, and
//! end-to-end erasure decoding built on top of it.
//!
//! Every experiment takes an explicit seed and derives an independent
//! substream per trial from `(seed, purpose, trial)`. Results therefore do
//! not depend on execution order: trials may run on any number of threads,
//! per-trial values are collected in index order, and aggregation uses
//! pairwise summation. Same seed, same report, bit for bit.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::blockstats::{BecOutputSymbol, BecSymbol};
use crate::codes::{linear_lrc_generator, CodeError, RepairPartition};
use crate::gf2::{BitMatrix, BitVector, Gf2Error, Solution};
use crate::infofn::Probability;
use crate::seeding;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("received word has {got} symbols, generator has {cols} columns")]
    DimensionMismatch { cols: usize, got: usize },
    #[error("empty codebook")]
    EmptyCodebook,
    #[error("codebook has {0} codewords, limit is 65536")]
    CodebookTooLarge(usize),
    #[error("unerased coordinates match no message; the received word was not a codeword")]
    Inconsistent,
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

/// Outcome of one seeded experiment. `target` is the analytic prediction
/// the estimate is compared against; see each experiment for whether it is
/// a mean or a bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrialReport {
    pub trials: u64,
    pub estimate: f64,
    pub std_error: f64,
    pub target: f64,
    pub seed: u64,
}

/// Sends `x` through BEC(p): each coordinate is independently erased with
/// probability `p`, otherwise delivered intact.
pub fn bec_transmit(x: &BitVector, p: Probability, rng: &mut impl Rng) -> BecOutputSymbol {
    let symbols = (0..x.len())
        .map(|i| {
            if rng.gen_bool(p.get()) {
                BecSymbol::Erased
            } else if x.get(i) {
                BecSymbol::One
            } else {
                BecSymbol::Zero
            }
        })
        .collect();
    BecOutputSymbol::new(symbols)
}

/// Sends `x` through BSC(p): each coordinate is independently flipped with
/// probability `p`. Panics if `p > 1/2`.
pub fn bsc_transmit(x: &BitVector, p: Probability, rng: &mut impl Rng) -> BitVector {
    assert!(p.get() <= 0.5, "BSC flip probability above 1/2");
    let bits: Vec<bool> = (0..x.len()).map(|i| x.get(i) ^ rng.gen_bool(p.get())).collect();
    BitVector::from_bits(&bits)
}

/// Estimates the fraction of coordinates that survive an i.i.d. erasure set
/// together with their whole repair group — the coordinates whose values are
/// pinned by the unerased data alone. The expectation is `(1-p)^(r+1)`,
/// which `target` records.
pub fn estimate_l_i(
    n: usize,
    r: u32,
    p: Probability,
    trials: u64,
    seed: u64,
) -> Result<TrialReport, ExperimentError> {
    let partition = RepairPartition::contiguous(n, r)?;
    let fractions: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = seeding::substream(seed, &[seeding::ERASURE, trial]);
            let erased: Vec<bool> = (0..n).map(|_| rng.gen_bool(p.get())).collect();
            let survivors: usize = partition
                .groups()
                .iter()
                .filter(|group| group.iter().all(|&j| !erased[j]))
                .map(|group| group.len())
                .sum();
            survivors as f64 / n as f64
        })
        .collect();
    let (estimate, std_error) = mean_and_std_error(&fractions);
    Ok(TrialReport {
        trials,
        estimate,
        std_error,
        target: (1.0 - p.get()).powi(r as i32 + 1),
        seed,
    })
}

/// Probability that a uniform `k x k` binary matrix is invertible:
/// `prod_{j=1..k} (1 - 2^-j)`, about 0.2888 already at moderate `k`.
pub fn square_invertibility_probability(k: usize) -> f64 {
    (1..=k as i32).map(|j| 1.0 - (0.5f64).powi(j)).product()
}

/// Estimates the probability that a fresh locality-respecting random
/// generator still has full row rank after each column is independently
/// dropped with probability `p`. Both the matrix and the column set are
/// redrawn every trial.
///
/// `target` is `prod (1 - 2^-j)`, the invertibility floor of a uniform
/// square ensemble: a reference level the success rate should stay above
/// while `k` is below the erasure rank threshold, not the mean of the
/// estimate.
pub fn rank_success_rate(
    n: usize,
    k: usize,
    r: u32,
    p: Probability,
    trials: u64,
    seed: u64,
) -> Result<TrialReport, ExperimentError> {
    RepairPartition::contiguous(n, r)?;
    assert!(k >= 1 && k <= n, "dimension k must lie in 1..=n");
    let successes: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|trial| -> Result<f64, ExperimentError> {
            let matrix_seed = seeding::derive(seed, &[seeding::RANK_TRIAL, trial]);
            let g = linear_lrc_generator(n, k, r, matrix_seed)?;
            let mut rng = seeding::substream(seed, &[seeding::KEEP_MASK, trial]);
            let kept: Vec<usize> = (0..n).filter(|_| rng.gen_bool(1.0 - p.get())).collect();
            let sub = g.column_submatrix(&kept)?;
            Ok(if sub.rank() == k { 1.0 } else { 0.0 })
        })
        .collect::<Result<_, _>>()?;
    let (estimate, std_error) = mean_and_std_error(&successes);
    Ok(TrialReport {
        trials,
        estimate,
        std_error,
        target: square_invertibility_probability(k),
        seed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeOutcome {
    Message(BitVector),
    /// The unerased columns do not span the message space; several messages
    /// fit the received word.
    Ambiguous,
}

/// Maximum-likelihood decoding over the BEC: restrict the generator to the
/// unerased columns and solve the linear system. Erasures are the only
/// noise, so a returned message is always the transmitted one;
/// [`ExperimentError::Inconsistent`] means the received word never was a
/// codeword of `generator`.
pub fn bec_decode(
    generator: &BitMatrix,
    received: &BecOutputSymbol,
) -> Result<DecodeOutcome, ExperimentError> {
    if received.len() != generator.cols() {
        return Err(ExperimentError::DimensionMismatch {
            cols: generator.cols(),
            got: received.len(),
        });
    }
    let sub = generator.column_submatrix(&received.unerased_positions())?;
    match sub.transpose().solve(&received.unerased_values())? {
        Solution::Unique(message) => Ok(DecodeOutcome::Message(message)),
        Solution::Ambiguous => Ok(DecodeOutcome::Ambiguous),
        Solution::Inconsistent => Err(ExperimentError::Inconsistent),
    }
}

/// Exhaustive minimum-distance decoding for toy codebooks (at most 2^16
/// codewords). Ties break to the lowest index.
pub fn bsc_ml_decode_tiny(
    codebook: &[BitVector],
    received: &BitVector,
) -> Result<usize, ExperimentError> {
    if codebook.is_empty() {
        return Err(ExperimentError::EmptyCodebook);
    }
    if codebook.len() > 1 << 16 {
        return Err(ExperimentError::CodebookTooLarge(codebook.len()));
    }
    let mut best = 0;
    let mut best_distance = usize::MAX;
    for (i, word) in codebook.iter().enumerate() {
        let d = word.distance(received)?;
        if d < best_distance {
            best_distance = d;
            best = i;
        }
    }
    Ok(best)
}

fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        n => {
            let (a, b) = xs.split_at(n / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}

/// `std_error` is the sample standard deviation over `sqrt(trials)`; zero
/// for a single trial.
fn mean_and_std_error(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = pairwise_sum(xs) / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let squares: Vec<f64> = xs.iter().map(|x| (x - mean) * (x - mean)).collect();
    let variance = pairwise_sum(&squares) / (n - 1.0);
    (mean, (variance / n).sqrt())
}

// ---------------------------------------------------------------------------
