//! Exact channel statistics of one repair block.
//!
//! The unit of analysis is a single repair group: `delta = r + 1` uses of a
//! memoryless channel carrying one uniformly drawn local codeword. For the
//! single-parity local code everything collapses to closed forms; for an
//! arbitrary small linear code the same quantities are computed exhaustively.
//! All mutual informations are *per input symbol* — the block value divided
//! by `delta` — so they compare directly against Shannon capacity.
//!
//! The closed forms:
//!
//! ```text
//! BEC(p):  I/delta = 1 - p - (1-p)^(r+1) / (r+1)
//! BSC(p):  I/delta = 1 - h(p) - [1 - h((1 - (1-2p)^(r+1)) / 2)] / (r+1)
//! ```
//!
//! Each has an independent cross-check in this module: the BEC form against
//! explicit summation over all `3^delta` channel outputs, the BSC form
//! against the coset-weight route
//! `I/delta = [k + H({A_i(1-p, p)})] / delta - h(p)`. The agreement of those
//! pipelines (and with the per-erasure-pattern rank computation for general
//! codes) is what the `verify` command and the acceptance suite pin down.

use thiserror::Error;

use crate::codes::{coset_weight_table, CodeError, LinearCode};
use crate::gf2::BitVector;
use crate::infofn::{h_bits, DiscreteDistribution, InfoError, Probability};

#[derive(Debug, Error)]
pub enum BlockError {
    #[error("block has {got} symbols, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("r = {r} exceeds the exhaustive budget of {max}")]
    RBudget { r: u32, max: u32 },
    #[error("length {length} exceeds the exhaustive budget of {max}")]
    LengthBudget { length: usize, max: usize },
    #[error("flip probability {0} is above 1/2")]
    BscParam(f64),
    #[error("r = {r}: r + 1 must be a Hamming code length (3, 7, 15, or 31)")]
    NotHammingLength { r: u32 },
    #[error("invalid BEC symbol {0:?} (expected '0', '1', or 'e')")]
    ParseSymbol(char),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Info(#[from] InfoError),
}

// ---------------------------------------------------------------------------
// Channels
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelKind {
    Bec,
    Bsc,
}

/// A memoryless binary-input channel: erasure or symmetric flip.
///
/// BSC parameters are canonicalized to `p <= 1/2`; larger values are
/// rejected, not mirrored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockChannel {
    kind: ChannelKind,
    param: Probability,
}

impl BlockChannel {
    pub fn bec(p: f64) -> Result<Self, BlockError> {
        Ok(BlockChannel { kind: ChannelKind::Bec, param: Probability::new(p)? })
    }

    pub fn bsc(p: f64) -> Result<Self, BlockError> {
        let param = Probability::new(p)?;
        if param.get() > 0.5 {
            return Err(BlockError::BscParam(p));
        }
        Ok(BlockChannel { kind: ChannelKind::Bsc, param })
    }

    pub fn kind(self) -> ChannelKind {
        self.kind
    }

    pub fn param(self) -> Probability {
        self.param
    }

    /// Shannon capacity without any locality constraint: `1 - p` for the
    /// BEC, `1 - h(p)` for the BSC.
    pub fn shannon_capacity(self) -> f64 {
        match self.kind {
            ChannelKind::Bec => 1.0 - self.param.get(),
            ChannelKind::Bsc => 1.0 - h_bits(self.param.get()),
        }
    }
}

// ---------------------------------------------------------------------------
// BEC block outputs
// ---------------------------------------------------------------------------

/// One received BEC symbol; erasure is a first-class value, not a sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BecSymbol {
    Zero,
    One,
    Erased,
}

/// A received BEC block: `delta` symbols from `{0, 1, e}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BecOutputSymbol {
    symbols: Vec<BecSymbol>,
}

impl BecOutputSymbol {
    pub fn new(symbols: Vec<BecSymbol>) -> Self {
        BecOutputSymbol { symbols }
    }

    /// Parses a string over `0`, `1`, `e`.
    pub fn from_str01e(s: &str) -> Result<Self, BlockError> {
        let symbols = s
            .chars()
            .map(|c| match c {
                '0' => Ok(BecSymbol::Zero),
                '1' => Ok(BecSymbol::One),
                'e' => Ok(BecSymbol::Erased),
                other => Err(BlockError::ParseSymbol(other)),
            })
            .collect::<Result<_, _>>()?;
        Ok(BecOutputSymbol { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[BecSymbol] {
        &self.symbols
    }

    pub fn erasure_count(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == BecSymbol::Erased).count()
    }

    pub fn unerased_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.symbols[i] != BecSymbol::Erased).collect()
    }

    /// The surviving values, in coordinate order.
    pub fn unerased_values(&self) -> BitVector {
        let bits: Vec<bool> = self
            .symbols
            .iter()
            .filter(|&&s| s != BecSymbol::Erased)
            .map(|&s| s == BecSymbol::One)
            .collect();
        BitVector::from_bits(&bits)
    }

    fn unerased_weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == BecSymbol::One).count()
    }
}

impl std::fmt::Display for BecOutputSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.symbols {
            f.write_str(match s {
                BecSymbol::Zero => "0",
                BecSymbol::One => "1",
                BecSymbol::Erased => "e",
            })?;
        }
        Ok(())
    }
}

/// Probability of receiving `y` when a uniform single-parity codeword of
/// length `r + 1` crosses BEC(p):
///
/// ```text
/// t = 0 erasures:  (1-p)^(r+1) / 2^r   if wt(y) even, else 0
/// t >= 1:          p^t (1-p)^(r+1-t) * 2^(t-1) / 2^r
/// ```
pub fn bec_block_output_prob(
    y: &BecOutputSymbol,
    p: Probability,
    r: u32,
) -> Result<f64, BlockError> {
    let delta = r as usize + 1;
    if y.len() != delta {
        return Err(BlockError::LengthMismatch { expected: delta, got: y.len() });
    }
    let p = p.get();
    let t = y.erasure_count();
    let scale = (0.5f64).powi(r as i32);
    if t == 0 {
        if y.unerased_weight().is_multiple_of(2) {
            Ok(scale * (1.0 - p).powi(delta as i32))
        } else {
            Ok(0.0)
        }
    } else {
        Ok(p.powi(t as i32)
            * (1.0 - p).powi((delta - t) as i32)
            * (2.0f64).powi(t as i32 - 1)
            * scale)
    }
}

/// Probability of receiving `y` when a uniform single-parity codeword of
/// length `r + 1` crosses BSC(p): `(1 ± (1-2p)^(r+1)) / 2^(r+1)`, the sign
/// set by the parity of `wt(y)`.
///
/// Panics if `p > 1/2`.
pub fn bsc_block_output_prob(y: &BitVector, p: Probability, r: u32) -> Result<f64, BlockError> {
    assert!(p.get() <= 0.5, "BSC flip probability above 1/2");
    let delta = r as usize + 1;
    if y.len() != delta {
        return Err(BlockError::LengthMismatch { expected: delta, got: y.len() });
    }
    let bias = (1.0 - 2.0 * p.get()).powi(delta as i32);
    let sign = if y.weight().is_multiple_of(2) { bias } else { -bias };
    Ok((1.0 + sign) * (0.5f64).powi(delta as i32))
}

// ---------------------------------------------------------------------------
// Closed-form block mutual information
// ---------------------------------------------------------------------------

/// Per-symbol mutual information of a single-parity block on BEC(p):
/// `1 - p - (1-p)^(r+1) / (r+1)`.
pub fn bec_block_mi(p: Probability, r: u32) -> f64 {
    let q = 1.0 - p.get();
    q - q.powi(r as i32 + 1) / (r as f64 + 1.0)
}

/// Per-symbol mutual information of a single-parity block on BSC(p):
/// `1 - h(p) - [1 - h((1 - (1-2p)^(r+1)) / 2)] / (r+1)`.
///
/// Panics if `p > 1/2`.
pub fn bsc_block_mi(p: Probability, r: u32) -> f64 {
    let p = p.get();
    assert!(p <= 0.5, "BSC flip probability above 1/2");
    let delta = r as f64 + 1.0;
    let mixed = (1.0 - (1.0 - 2.0 * p).powi(r as i32 + 1)) / 2.0;
    1.0 - h_bits(p) - (1.0 - h_bits(mixed)) / delta
}

/// The BEC closed form re-derived numerically: sums
/// `-P(y) log2 P(y)` over every output `y` (grouped as erasure pattern plus
/// surviving values) and subtracts the conditional entropy `(r+1) h(p)`.
/// Exhaustive over `3^(r+1)` outputs, so `r` is capped at 12.
pub fn bec_block_mi_bruteforce(p: Probability, r: u32) -> Result<f64, BlockError> {
    const MAX_R: u32 = 12;
    if r > MAX_R {
        return Err(BlockError::RBudget { r, max: MAX_R });
    }
    let delta = r as usize + 1;
    let mut output_entropy = KahanSum::default();
    for pattern in 0u32..1 << delta {
        let erased = pattern.count_ones() as usize;
        for values in 0u32..1 << (delta - erased) {
            let mut symbols = Vec::with_capacity(delta);
            let mut vbit = 0;
            for i in 0..delta {
                if pattern >> i & 1 == 1 {
                    symbols.push(BecSymbol::Erased);
                } else {
                    symbols.push(if values >> vbit & 1 == 1 {
                        BecSymbol::One
                    } else {
                        BecSymbol::Zero
                    });
                    vbit += 1;
                }
            }
            let prob = bec_block_output_prob(&BecOutputSymbol::new(symbols), p, r)?;
            if prob > 0.0 {
                output_entropy.add(-prob * prob.log2());
            }
        }
    }
    Ok(output_entropy.total() / delta as f64 - h_bits(p.get()))
}

/// Per-symbol mutual information of an arbitrary local code on BEC(p),
/// computed per erasure pattern: the surviving information is the rank of
/// the generator restricted to the unerased columns, so
///
/// ```text
/// I/delta = (1/delta) * sum_E p^|E| (1-p)^(delta-|E|) rank(G_unerased)
/// ```
///
/// Exhaustive over `2^delta` patterns; the code length is capped at 20.
pub fn local_code_bec_mi_exact(code: &LinearCode, p: Probability) -> Result<f64, BlockError> {
    const MAX_LEN: usize = 20;
    let delta = code.length();
    if delta > MAX_LEN {
        return Err(BlockError::LengthBudget { length: delta, max: MAX_LEN });
    }
    let p = p.get();
    let mut acc = KahanSum::default();
    for pattern in 0u32..1 << delta {
        let erased = pattern.count_ones() as usize;
        let prob = p.powi(erased as i32) * (1.0 - p).powi((delta - erased) as i32);
        if prob == 0.0 {
            continue;
        }
        let keep: Vec<usize> = (0..delta).filter(|&i| pattern >> i & 1 == 0).collect();
        let sub = code.generator().column_submatrix(&keep).expect("columns in range");
        acc.add(prob * sub.rank() as f64);
    }
    Ok(acc.total() / delta as f64)
}

/// Per-symbol mutual information of an arbitrary local code on BSC(p) via
/// its coset weight table:
///
/// ```text
/// I/delta = [k + H({A_i(1-p, p)})] / delta - h(p)
/// ```
///
/// where `A_i` are the coset enumerator values, which must form a
/// probability distribution (anything else signals a table bug and surfaces
/// as an error). Panics if `p > 1/2`.
pub fn local_code_bsc_mi(code: &LinearCode, p: Probability) -> Result<f64, BlockError> {
    assert!(p.get() <= 0.5, "BSC flip probability above 1/2");
    let table = coset_weight_table(code)?;
    let coset_probs = DiscreteDistribution::new(table.enumerator_distribution(p.get()))?;
    let delta = code.length() as f64;
    let k = code.dimension() as f64;
    Ok((k + coset_probs.entropy()) / delta - h_bits(p.get()))
}

/// `x log2 x` with the `0 log 0 = 0` convention.
fn xlx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

pub(crate) fn require_hamming_length(r: u32) -> Result<(), BlockError> {
    if [3u32, 7, 15, 31].contains(&(r + 1)) {
        Ok(())
    } else {
        Err(BlockError::NotHammingLength { r })
    }
}

/// Shared tail of the Hamming-local-code closed form; `z` is the channel
/// bias raised to `(r+2)/2`.
pub(crate) fn hamming_rho3_tail(z: f64, r: u32) -> f64 {
    let r1 = r as f64 + 1.0;
    let r2 = r as f64 + 2.0;
    xlx(1.0 - z) / r2 + (1.0 + r1 * z) * (1.0 + r1 * z).log2() / (r1 * r2)
}

/// Closed-form per-symbol mutual information of a Hamming local code (rho =
/// 3) on BSC(p):
///
/// ```text
/// 1 - h(p) - (1-z) log2(1-z) / (r+2) - (1 + (r+1) z) log2(1 + (r+1) z) / ((r+1)(r+2))
/// ```
///
/// with `z = (1-2p)^((r+2)/2)`. Requires `r + 1` to be a Hamming length
/// (3, 7, 15, 31); panics if `p > 1/2`. At `p = 0` the value is
/// `1 - log2(r+2) / (r+1)`.
pub fn hamming_rho3_bsc_mi(p: Probability, r: u32) -> Result<f64, BlockError> {
    assert!(p.get() <= 0.5, "BSC flip probability above 1/2");
    require_hamming_length(r)?;
    let z = (1.0 - 2.0 * p.get()).powi((r as i32 + 2) / 2);
    Ok(1.0 - h_bits(p.get()) - hamming_rho3_tail(z, r))
}

/// Compensated (Kahan) accumulator; keeps exhaustive entropy sums accurate
/// over millions of terms.
#[derive(Default)]
struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum
    }
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{hamming_code, single_parity_code};

    fn prob(p: f64) -> Probability {
        Probability::new(p).unwrap()
    }

    #[test]
    fn channel_construction() {
        assert!(BlockChannel::bec(1.0).is_ok());
        assert!(BlockChannel::bec(1.5).is_err());
        assert!(BlockChannel::bsc(0.5).is_ok());
        assert!(matches!(BlockChannel::bsc(0.6), Err(BlockError::BscParam(_))));
        assert_eq!(BlockChannel::bec(0.3).unwrap().shannon_capacity(), 0.7);
        let bsc = BlockChannel::bsc(0.1).unwrap().shannon_capacity();
        assert!((bsc - 0.5310044064107188).abs() < 1e-15);
    }

    #[test]
    fn bec_symbol_round_trip() {
        let y = BecOutputSymbol::from_str01e("10e01").unwrap();
        assert_eq!(y.to_string(), "10e01");
        assert_eq!(y.erasure_count(), 1);
        assert_eq!(y.unerased_positions(), vec![0, 1, 3, 4]);
        assert_eq!(y.unerased_values().to_string(), "1001");
        assert!(BecOutputSymbol::from_str01e("01?").is_err());
    }

    #[test]
    fn bec_output_probs_at_known_points() {
        let y = BecOutputSymbol::from_str01e("000").unwrap();
        assert_eq!(bec_block_output_prob(&y, prob(0.0), 2).unwrap(), 0.25);
        let y = BecOutputSymbol::from_str01e("eee").unwrap();
        assert_eq!(bec_block_output_prob(&y, prob(1.0), 2).unwrap(), 1.0);
        let y = BecOutputSymbol::from_str01e("110").unwrap();
        assert_eq!(bec_block_output_prob(&y, prob(0.5), 2).unwrap(), 0.03125);
        let y = BecOutputSymbol::from_str01e("100").unwrap();
        assert_eq!(bec_block_output_prob(&y, prob(0.3), 2).unwrap(), 0.0);
        let y = BecOutputSymbol::from_str01e("00").unwrap();
        assert!(bec_block_output_prob(&y, prob(0.3), 2).is_err());
    }

    // The case formula against a direct sum over codewords and transition
    // probabilities.
    #[test]
    fn bec_output_probs_match_first_principles() {
        for r in 1..=5u32 {
            let delta = r as usize + 1;
            let code = single_parity_code(r);
            let codewords: Vec<BitVector> =
                code.generator().enumerate_span().unwrap().collect();
            for &p in &[0.0, 0.2, 0.5, 0.9, 1.0] {
                for pattern in 0u32..1 << delta {
                    for values in 0u32..1 << delta {
                        // Skip value bits under erasures so each output is
                        // visited once.
                        if values & pattern != 0 {
                            continue;
                        }
                        let symbols: Vec<BecSymbol> = (0..delta)
                            .map(|i| {
                                if pattern >> i & 1 == 1 {
                                    BecSymbol::Erased
                                } else if values >> i & 1 == 1 {
                                    BecSymbol::One
                                } else {
                                    BecSymbol::Zero
                                }
                            })
                            .collect();
                        let y = BecOutputSymbol::new(symbols.clone());
                        let direct: f64 = codewords
                            .iter()
                            .map(|cw| {
                                let per: f64 = (0..delta)
                                    .map(|i| match symbols[i] {
                                        BecSymbol::Erased => p,
                                        BecSymbol::One if cw.get(i) => 1.0 - p,
                                        BecSymbol::Zero if !cw.get(i) => 1.0 - p,
                                        _ => 0.0,
                                    })
                                    .product();
                                per / codewords.len() as f64
                            })
                            .sum();
                        let formula = bec_block_output_prob(&y, prob(p), r).unwrap();
                        assert!(
                            (formula - direct).abs() < 1e-14,
                            "r={r} p={p} y={y}: {formula} vs {direct}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn bec_outputs_normalize() {
        for r in 1..=6u32 {
            let delta = r as usize + 1;
            for &p in &[0.0, 0.17, 0.5, 0.83, 1.0] {
                let mut total = 0.0;
                for pattern in 0u32..1 << delta {
                    for values in 0u32..1 << delta {
                        if values & pattern != 0 {
                            continue;
                        }
                        let symbols: Vec<BecSymbol> = (0..delta)
                            .map(|i| {
                                if pattern >> i & 1 == 1 {
                                    BecSymbol::Erased
                                } else if values >> i & 1 == 1 {
                                    BecSymbol::One
                                } else {
                                    BecSymbol::Zero
                                }
                            })
                            .collect();
                        total +=
                            bec_block_output_prob(&BecOutputSymbol::new(symbols), prob(p), r)
                                .unwrap();
                    }
                }
                assert!((total - 1.0).abs() < 1e-12, "r={r} p={p}: sum {total}");
            }
        }
    }

    #[test]
    fn bsc_output_probs_at_known_points() {
        let p = prob(0.1);
        let y00 = BitVector::from_str01("00").unwrap();
        let y01 = BitVector::from_str01("01").unwrap();
        assert!((bsc_block_output_prob(&y00, p, 1).unwrap() - 0.41).abs() < 1e-15);
        assert!((bsc_block_output_prob(&y01, p, 1).unwrap() - 0.09).abs() < 1e-15);
        let uniform = bsc_block_output_prob(&y00, prob(0.5), 1).unwrap();
        assert_eq!(uniform, 0.25);
        for r in 1..=6u32 {
            let delta = r as usize + 1;
            for &p in &[0.0, 0.2, 0.5] {
                let total: f64 = (0u32..1 << delta)
                    .map(|v| {
                        let bits: Vec<bool> = (0..delta).map(|i| v >> i & 1 == 1).collect();
                        bsc_block_output_prob(&BitVector::from_bits(&bits), prob(p), r)
                            .unwrap()
                    })
                    .sum();
                assert!((total - 1.0).abs() < 1e-12, "r={r} p={p}");
            }
        }
    }

    #[test]
    fn bec_mi_closed_form_values() {
        assert!((bec_block_mi(prob(0.0), 2) - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(bec_block_mi(prob(1.0), 2), 0.0);
        assert_eq!(bec_block_mi(prob(0.5), 1), 0.375);
    }

    #[test]
    fn bec_mi_monotone_in_p_and_r() {
        for r in 1..=6u32 {
            let mut last = f64::INFINITY;
            for i in 0..=50 {
                let p = prob(i as f64 / 50.0);
                let mi = bec_block_mi(p, r);
                assert!(mi <= last + 1e-15);
                assert!(bec_block_mi(p, r + 1) >= mi - 1e-15);
                last = mi;
            }
        }
    }

    #[test]
    fn bec_bruteforce_agrees_with_closed_form() {
        for r in 1..=3u32 {
            for &p in &[0.0, 0.25, 0.5, 0.75, 1.0] {
                let brute = bec_block_mi_bruteforce(prob(p), r).unwrap();
                let closed = bec_block_mi(prob(p), r);
                assert!((brute - closed).abs() < 1e-9, "r={r} p={p}: {brute} vs {closed}");
            }
        }
        assert!(matches!(
            bec_block_mi_bruteforce(prob(0.5), 13),
            Err(BlockError::RBudget { r: 13, max: 12 })
        ));
    }

    #[test]
    fn bsc_mi_closed_form_values() {
        assert!((bsc_block_mi(prob(0.0), 2) - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(bsc_block_mi(prob(0.5), 2), 0.0);
        let mi = bsc_block_mi(prob(0.1), 1);
        assert!((mi - 0.3710429292748587).abs() < 1e-15, "got {mi}");
    }

    #[test]
    fn bsc_mi_agrees_with_coset_route() {
        for r in 1..=4u32 {
            for &p in &[0.0, 0.1, 0.3, 0.5] {
                let closed = bsc_block_mi(prob(p), r);
                let coset = local_code_bsc_mi(&single_parity_code(r), prob(p)).unwrap();
                assert!(
                    (closed - coset).abs() < 1e-12,
                    "r={r} p={p}: {closed} vs {coset}"
                );
            }
        }
    }

    #[test]
    fn hamming_local_mi_frozen_value() {
        let via_cosets = local_code_bsc_mi(&hamming_code(3).unwrap(), prob(0.1)).unwrap();
        assert!((via_cosets - 0.45235930762711394).abs() < 1e-12, "got {via_cosets}");
        let closed = hamming_rho3_bsc_mi(prob(0.1), 6).unwrap();
        assert!((closed - via_cosets).abs() < 1e-12);
    }

    #[test]
    fn hamming_closed_form_all_orders() {
        // Orders whose coset tables fit the exhaustive budget.
        for (m, r) in [(2u32, 2u32), (3, 6), (4, 14)] {
            let code = hamming_code(m).unwrap();
            for i in 0..=10 {
                let p = prob(i as f64 * 0.05);
                let closed = hamming_rho3_bsc_mi(p, r).unwrap();
                let coset = local_code_bsc_mi(&code, p).unwrap();
                assert!(
                    (closed - coset).abs() < 1e-9,
                    "m={m} p={}: {closed} vs {coset}",
                    p.get()
                );
            }
        }
        assert!(matches!(
            hamming_rho3_bsc_mi(prob(0.1), 5),
            Err(BlockError::NotHammingLength { r: 5 })
        ));
    }

    #[test]
    fn hamming_closed_form_endpoint() {
        // p = 0: locality costs exactly log2(r+2) / (r+1) bits.
        let mi = hamming_rho3_bsc_mi(prob(0.0), 6).unwrap();
        assert!((mi - 4.0 / 7.0).abs() < 1e-15);
        let mi = hamming_rho3_bsc_mi(prob(0.5), 6).unwrap();
        assert!(mi.abs() < 1e-15);
    }

    #[test]
    fn bec_rank_route_agrees_with_closed_form() {
        for r in 1..=4u32 {
            for &p in &[0.0, 0.3, 0.5, 1.0] {
                let exact = local_code_bec_mi_exact(&single_parity_code(r), prob(p)).unwrap();
                let closed = bec_block_mi(prob(p), r);
                assert!((exact - closed).abs() < 1e-9, "r={r} p={p}");
            }
        }
    }

    #[test]
    fn bec_rank_route_endpoints_for_hamming() {
        let code = hamming_code(3).unwrap();
        let at_zero = local_code_bec_mi_exact(&code, prob(0.0)).unwrap();
        assert!((at_zero - 4.0 / 7.0).abs() < 1e-15);
        let at_one = local_code_bec_mi_exact(&code, prob(1.0)).unwrap();
        assert_eq!(at_one, 0.0);
    }

    #[test]
    fn mi_never_exceeds_shannon() {
        for r in 1..=8u32 {
            for i in 0..=20 {
                let p = prob(i as f64 * 0.05);
                assert!(bec_block_mi(p, r) <= 1.0 - p.get() + 1e-12);
                if p.get() <= 0.5 {
                    assert!(bsc_block_mi(p, r) <= 1.0 - h_bits(p.get()) + 1e-12);
                }
            }
        }
    }
}
