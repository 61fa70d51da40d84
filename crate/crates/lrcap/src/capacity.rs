//! Capacity of binary-input channels under a locality constraint.
//!
//! Every query returns a [`CapacityResult`] whose `kind` says whether the
//! number is exact or one side of a bound. The distinction is load-bearing:
//! the BEC value is a theorem, the BSC and general-channel values are a
//! sandwich whose tightness is open, and the `rho >= 3` results are
//! one-sided. Collapsing them to bare floats invites misquotation.
//!
//! The headline quantities for locality `r` (repair groups of size
//! `delta = r + 1`):
//!
//! ```text
//! BEC(p), exact:      1 - p - (1-p)^(r+1) / (r+1)
//! BSC(p), lower:      1 - h(p) - [1 - h((1-(1-2p)^(r+1))/2)] / (r+1)
//! BSC(p), upper:      C - C^(r+1) / (r+1),  C = 1 - h(p)
//! general W:          same pair with C = Cap(W) and p = h^{-1}(1 - Cap(W))
//! ```
//!
//! Values are clamped to `[0, 1]`; a clamp larger than `1e-9` is logged,
//! since it would mean a formula produced real garbage rather than endpoint
//! round-off.

use crate::blockstats::{
    bec_block_mi, bsc_block_mi, hamming_rho3_bsc_mi, hamming_rho3_tail, require_hamming_length,
    BlockError,
};
use crate::infofn::{binary_entropy_inv, h_bits, Probability};

/// The channel a capacity statement refers to. `General` is a binary-input
/// symmetric channel known only through its Shannon capacity, which is all
/// the general bounds depend on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelModel {
    Bec { p: f64 },
    Bsc { p: f64 },
    General { capacity: f64 },
}

impl ChannelModel {
    pub fn shannon_capacity(self) -> f64 {
        match self {
            ChannelModel::Bec { p } => 1.0 - p,
            ChannelModel::Bsc { p } => 1.0 - h_bits(p),
            ChannelModel::General { capacity } => capacity,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Exact,
    Lower,
    Upper,
}

/// One capacity statement: a value in bits per channel use, tagged with the
/// channel, the locality parameters, and whether it is exact or a bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityResult {
    pub channel: ChannelModel,
    pub r: u32,
    /// Recoverability: each symbol must be computable from any
    /// `r + 2 - rho` survivors of its group. Plain locality is `rho = 2`.
    pub rho: u32,
    pub kind: BoundKind,
    pub value: f64,
}

impl CapacityResult {
    pub fn shannon_capacity(&self) -> f64 {
        self.channel.shannon_capacity()
    }

    /// What locality costs on this channel: Shannon capacity minus `value`.
    pub fn gap(&self) -> f64 {
        gap(self.shannon_capacity(), self.value)
    }
}

fn clamped(raw: f64) -> f64 {
    let v = raw.clamp(0.0, 1.0);
    if (v - raw).abs() > 1e-9 {
        log::warn!("capacity value {raw} clamped to {v}");
    }
    v
}

/// Exact locality-`r` capacity of BEC(p): `1 - p - (1-p)^(r+1) / (r+1)`.
pub fn cap_bec_lrc(p: Probability, r: u32) -> CapacityResult {
    assert!(r >= 1);
    CapacityResult {
        channel: ChannelModel::Bec { p: p.get() },
        r,
        rho: 2,
        kind: BoundKind::Exact,
        value: clamped(bec_block_mi(p, r)),
    }
}

/// Capacity lost to the locality constraint. For the BEC this equals
/// `(1-p)^(r+1) / (r+1)` exactly, maximal at `p = 0`.
pub fn gap(shannon: f64, lrc_value: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&shannon));
    debug_assert!((0.0..=1.0).contains(&lrc_value));
    shannon - lrc_value
}

/// Sandwich for the locality-`r` capacity of BSC(p). The lower bound is the
/// parity-block mutual information; the upper comes from reducing to an
/// erasure channel of matching capacity. They coincide at `p = 0` and
/// `p = 1/2`.
///
/// Panics if `p > 1/2`.
pub fn cap_bsc_lrc_bounds(p: Probability, r: u32) -> (CapacityResult, CapacityResult) {
    assert!(r >= 1);
    let channel = ChannelModel::Bsc { p: p.get() };
    let lower = clamped(bsc_block_mi(p, r));
    let c = 1.0 - h_bits(p.get());
    let upper = clamped(c - c.powi(r as i32 + 1) / (r as f64 + 1.0));
    (
        CapacityResult { channel, r, rho: 2, kind: BoundKind::Lower, value: lower },
        CapacityResult { channel, r, rho: 2, kind: BoundKind::Upper, value: upper },
    )
}

/// Sandwich for any binary-input symmetric channel with Shannon capacity
/// `cap_w`:
///
/// ```text
/// lower = Cap(W) - [1 - h((1 - (1-2p*)^(r+1)) / 2)] / (r+1),  p* = h^{-1}(1 - Cap(W))
/// upper = Cap(W) - Cap(W)^(r+1) / (r+1)
/// ```
///
/// For `cap_w = 1 - p` the upper bound reproduces the exact BEC value; for
/// `cap_w = 1 - h(p)` the lower bound reproduces the BSC lower bound (to
/// the bisection tolerance of `h^{-1}`).
///
/// Panics if `cap_w` is outside `[0, 1]`.
pub fn cap_general_bounds(cap_w: f64, r: u32) -> (CapacityResult, CapacityResult) {
    assert!(r >= 1);
    assert!(
        (0.0..=1.0).contains(&cap_w),
        "channel capacity {cap_w} outside [0, 1]"
    );
    let channel = ChannelModel::General { capacity: cap_w };
    let p_star = binary_entropy_inv(1.0 - cap_w).expect("1 - cap_w is a valid entropy");
    let mixed = (1.0 - (1.0 - 2.0 * p_star.get()).powi(r as i32 + 1)) / 2.0;
    let lower = clamped(cap_w - (1.0 - h_bits(mixed)) / (r as f64 + 1.0));
    let upper = clamped(cap_w - cap_w.powi(r as i32 + 1) / (r as f64 + 1.0));
    (
        CapacityResult { channel, r, rho: 2, kind: BoundKind::Lower, value: lower },
        CapacityResult { channel, r, rho: 2, kind: BoundKind::Upper, value: upper },
    )
}

/// Converse for `(rho, r)`-recoverability on BEC(p):
/// `1 - p - (rho-1)(1-p)^(r+1) / (r+1)`. At `rho = 2` this is the exact
/// capacity; for larger `rho` only an upper bound is known.
pub fn cap_bec_rho_converse(p: Probability, rho: u32, r: u32) -> CapacityResult {
    assert!(r >= 1);
    assert!(rho >= 2, "recoverability needs rho >= 2");
    let q = 1.0 - p.get();
    let value = q - (rho - 1) as f64 * q.powi(r as i32 + 1) / (r as f64 + 1.0);
    CapacityResult {
        channel: ChannelModel::Bec { p: p.get() },
        r,
        rho,
        kind: if rho == 2 { BoundKind::Exact } else { BoundKind::Upper },
        value: clamped(value),
    }
}

/// Achievability for `rho = 3` on BSC(p) using a Hamming local code:
/// the closed-form block mutual information. Requires `r + 1` to be a
/// Hamming length; panics if `p > 1/2`.
pub fn cap_bsc_hamming_rho3_lower(p: Probability, r: u32) -> Result<CapacityResult, BlockError> {
    let value = clamped(hamming_rho3_bsc_mi(p, r)?);
    Ok(CapacityResult {
        channel: ChannelModel::Bsc { p: p.get() },
        r,
        rho: 3,
        kind: BoundKind::Lower,
        value,
    })
}

/// Achievability for `rho = 3` on BEC(p): the BSC form with `1 - h(p)`
/// replaced by `1 - p` and the bias taken at `h^{-1}(p)`, i.e.
/// `z = (1 - 2 h^{-1}(p))^((r+2)/2)`. At `p = 0` this evaluates to
/// `1 - log2(r+2) / (r+1)`, the Hamming code rate.
pub fn cap_bec_hamming_rho3_lower(p: Probability, r: u32) -> Result<CapacityResult, BlockError> {
    require_hamming_length(r)?;
    let p_star = binary_entropy_inv(p.get()).expect("p is a valid entropy");
    let z = (1.0 - 2.0 * p_star.get()).powi((r as i32 + 2) / 2);
    let value = clamped(1.0 - p.get() - hamming_rho3_tail(z, r));
    Ok(CapacityResult {
        channel: ChannelModel::Bec { p: p.get() },
        r,
        rho: 3,
        kind: BoundKind::Lower,
        value,
    })
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn prob(p: f64) -> Probability {
        Probability::new(p).unwrap()
    }

    #[test]
    fn bec_exact_values() {
        assert!((cap_bec_lrc(prob(0.0), 2).value - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(cap_bec_lrc(prob(1.0), 3).value, 0.0);
        assert_eq!(cap_bec_lrc(prob(0.5), 1).value, 0.375);
        assert!((cap_bec_lrc(prob(0.5), 2).value - 11.0 / 24.0).abs() < 1e-15);
        assert_eq!(cap_bec_lrc(prob(0.2), 4).kind, BoundKind::Exact);
        assert_eq!(cap_bec_lrc(prob(0.2), 4).rho, 2);
    }

    #[test]
    fn bec_matches_block_mi_bit_for_bit() {
        for r in 1..=8u32 {
            for i in 0..=100 {
                let p = prob(i as f64 / 100.0);
                assert_eq!(
                    cap_bec_lrc(p, r).value.to_bits(),
                    bec_block_mi(p, r).to_bits()
                );
            }
        }
    }

    #[test]
    fn gap_values() {
        let cap = cap_bec_lrc(prob(0.5), 2);
        assert!((cap.gap() - 1.0 / 24.0).abs() < 1e-12);
        assert!((cap_bec_lrc(prob(0.0), 2).gap() - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(cap_bec_lrc(prob(1.0), 2).gap(), 0.0);
    }

    #[test]
    fn bec_monotone_in_r() {
        for r in 1..=9u32 {
            for i in 0..=100 {
                let p = prob(i as f64 / 100.0);
                assert!(cap_bec_lrc(p, r + 1).value >= cap_bec_lrc(p, r).value - 1e-15);
            }
        }
    }

    #[test]
    fn bsc_bounds_at_endpoints() {
        let (lo, hi) = cap_bsc_lrc_bounds(prob(0.0), 2);
        assert_eq!(lo.value.to_bits(), hi.value.to_bits());
        assert!((lo.value - 2.0 / 3.0).abs() < 1e-15);
        let (lo, hi) = cap_bsc_lrc_bounds(prob(0.5), 4);
        assert_eq!(lo.value, 0.0);
        assert_eq!(hi.value, 0.0);
    }

    #[test]
    fn bsc_bounds_frozen_point() {
        let (lo, hi) = cap_bsc_lrc_bounds(prob(0.1), 1);
        assert!((lo.value - 0.3710429292748587).abs() < 1e-12, "lower {}", lo.value);
        assert!((hi.value - 0.3900215665969189).abs() < 1e-12, "upper {}", hi.value);
        assert_eq!(lo.kind, BoundKind::Lower);
        assert_eq!(hi.kind, BoundKind::Upper);
    }

    #[test]
    fn bsc_bounds_ordered_and_below_shannon() {
        for r in 1..=10u32 {
            for i in 0..=1000 {
                let p = prob(i as f64 * 0.0005);
                let (lo, hi) = cap_bsc_lrc_bounds(p, r);
                assert!(lo.value <= hi.value + 1e-15, "r={r} p={}", p.get());
                let shannon = 1.0 - h_bits(p.get());
                assert!(hi.value <= shannon + 1e-12);
                assert!(lo.value >= 0.0);
            }
        }
    }

    #[test]
    fn general_bounds_at_endpoints() {
        let (lo, hi) = cap_general_bounds(1.0, 2);
        assert_eq!(lo.value.to_bits(), hi.value.to_bits());
        assert!((lo.value - 2.0 / 3.0).abs() < 1e-15);
        let (lo, hi) = cap_general_bounds(0.0, 5);
        assert_eq!(lo.value, 0.0);
        assert_eq!(hi.value, 0.0);
    }

    #[test]
    fn general_bounds_frozen_point() {
        let (lo, hi) = cap_general_bounds(0.531, 1);
        assert!((lo.value - 0.37104095561628536).abs() < 1e-12, "lower {}", lo.value);
        assert!((hi.value - 0.3900195).abs() < 1e-12, "upper {}", hi.value);
    }

    #[test]
    fn general_upper_reproduces_bec_exactly() {
        for r in 1..=8u32 {
            for i in 0..=100 {
                let p = i as f64 / 100.0;
                let (_, hi) = cap_general_bounds(1.0 - p, r);
                let exact = cap_bec_lrc(prob(p), r);
                assert_eq!(hi.value.to_bits(), exact.value.to_bits(), "r={r} p={p}");
            }
        }
    }

    #[test]
    fn general_lower_reproduces_bsc_lower() {
        for r in 1..=8u32 {
            for i in 0..=50 {
                let p = prob(i as f64 / 100.0);
                let (lo, _) = cap_general_bounds(1.0 - h_bits(p.get()), r);
                let (bsc_lo, _) = cap_bsc_lrc_bounds(p, r);
                assert!(
                    (lo.value - bsc_lo.value).abs() < 1e-9,
                    "r={r} p={}: {} vs {}",
                    p.get(),
                    lo.value,
                    bsc_lo.value
                );
            }
        }
    }

    #[test]
    fn rho2_converse_is_the_exact_capacity() {
        for i in 0..=100 {
            let p = prob(i as f64 / 100.0);
            for r in 1..=6u32 {
                let conv = cap_bec_rho_converse(p, 2, r);
                assert_eq!(conv.value.to_bits(), cap_bec_lrc(p, r).value.to_bits());
                assert_eq!(conv.kind, BoundKind::Exact);
            }
        }
    }

    #[test]
    fn rho3_converse_values() {
        let c = cap_bec_rho_converse(prob(0.0), 3, 6);
        assert!((c.value - 5.0 / 7.0).abs() < 1e-15);
        assert_eq!(c.kind, BoundKind::Upper);
        assert_eq!(cap_bec_rho_converse(prob(1.0), 3, 6).value, 0.0);
    }

    #[test]
    fn hamming_rho3_lower_values() {
        let bsc = cap_bsc_hamming_rho3_lower(prob(0.1), 6).unwrap();
        assert!((bsc.value - 0.45235930762711394).abs() < 1e-12);
        assert_eq!(bsc.rho, 3);
        assert_eq!(bsc.kind, BoundKind::Lower);
        assert!(cap_bsc_hamming_rho3_lower(prob(0.5), 6).unwrap().value.abs() < 1e-15);

        let bec = cap_bec_hamming_rho3_lower(prob(0.0), 6).unwrap();
        assert!((bec.value - 4.0 / 7.0).abs() < 1e-15);
        assert!(cap_bec_hamming_rho3_lower(prob(1.0), 6).unwrap().value.abs() < 1e-12);

        assert!(cap_bsc_hamming_rho3_lower(prob(0.1), 5).is_err());
        assert!(cap_bec_hamming_rho3_lower(prob(0.1), 4).is_err());
    }

    #[test]
    fn hamming_rho3_lower_stays_below_converse() {
        for &r in &[2u32, 6, 14] {
            for i in 0..=50 {
                let p = prob(i as f64 / 50.0);
                let lower = cap_bec_hamming_rho3_lower(p, r).unwrap().value;
                let upper = cap_bec_rho_converse(p, 3, r).value;
                assert!(lower <= upper + 1e-12, "r={r} p={}", p.get());
            }
        }
    }

    proptest! {
        #[test]
        fn general_bounds_ordered(cap_w in 0.0f64..=1.0, r in 1u32..=10) {
            let (lo, hi) = cap_general_bounds(cap_w, r);
            prop_assert!(lo.value <= hi.value + 1e-15);
            prop_assert!(hi.value <= cap_w + 1e-12);
            prop_assert!(lo.value >= 0.0);
        }

        #[test]
        fn bec_value_within_range(p in 0.0f64..=1.0, r in 1u32..=10) {
            let cap = cap_bec_lrc(prob(p), r);
            prop_assert!(cap.value >= 0.0);
            prop_assert!(cap.value <= 1.0 - p + 1e-15);
        }

        #[test]
        fn bsc_bounds_within_range(p in 0.0f64..=0.5, r in 1u32..=10) {
            let (lo, hi) = cap_bsc_lrc_bounds(prob(p), r);
            let shannon = 1.0 - h_bits(p);
            prop_assert!(lo.value >= 0.0);
            prop_assert!(lo.value <= hi.value + 1e-15);
            prop_assert!(hi.value <= shannon + 1e-12);
        }
    }
}
