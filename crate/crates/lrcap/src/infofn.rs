//! Entropy primitives, all in bits (logs base 2).
//!
//! The binary entropy function
//!
//! ```text
//! h(x) = -x*log2(x) - (1-x)*log2(1-x),      h(0) = h(1) = 0
//! ```
//!
//! its inverse on `[0, 1/2]`, and the entropy of a finite distribution. These
//! are the only transcendental functions the capacity formulas need, so their
//! conventions are pinned here once: `0 * log 0 = 0`, and the inverse is the
//! *left* branch (`binary_entropy_inv(y) <= 1/2`).
//!
//! ## Example
//!
//! ```
//! use lrcap::infofn::{binary_entropy, binary_entropy_inv, Probability};
//!
//! let p = Probability::new(0.11).unwrap();
//! let y = binary_entropy(p);
//! assert!((y - 0.4999159581645280).abs() < 1e-12);
//! let back = binary_entropy_inv(y).unwrap();
//! assert!((back.get() - 0.11).abs() < 1e-9);
//! ```

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum InfoError {
    #[error("{name} = {value} is outside [0, 1]")]
    Domain { name: &'static str, value: f64 },
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
}

/// A probability: a finite `f64` in `[0, 1]`.
///
/// Channel parameters and weights are validated once, at construction, so the
/// numeric code downstream never re-checks ranges.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    pub fn new(value: f64) -> Result<Self, InfoError> {
        if value.is_finite() && (0.0..=1.0).contains(&value) {
            Ok(Probability(value))
        } else {
            Err(InfoError::Domain { name: "probability", value })
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Probability {
    type Error = InfoError;

    fn try_from(value: f64) -> Result<Self, InfoError> {
        Probability::new(value)
    }
}

impl std::fmt::Display for Probability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// `h` on a raw, already-validated argument. Crate-internal workhorse:
/// capacity formulas feed it intermediates that are in range by construction.
#[inline]
pub(crate) fn h_bits(x: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&x), "h argument {x} out of range");
    if x == 0.0 || x == 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Binary entropy `h(x)` in bits.
pub fn binary_entropy(x: Probability) -> f64 {
    h_bits(x.get())
}

/// Inverse of `h` on the left branch: the unique `x` in `[0, 1/2]` with
/// `h(x) = y`.
///
/// Bisection with absolute tolerance `1e-12` on `x`, at most 64 iterations.
/// The endpoints are returned exactly: `y = 0` gives `0`, `y = 1` gives `1/2`.
pub fn binary_entropy_inv(y: f64) -> Result<Probability, InfoError> {
    if !y.is_finite() || !(0.0..=1.0).contains(&y) {
        return Err(InfoError::Domain { name: "entropy", value: y });
    }
    if y == 0.0 {
        return Ok(Probability(0.0));
    }
    if y == 1.0 {
        return Ok(Probability(0.5));
    }
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    for _ in 0..64 {
        if hi - lo <= 1e-12 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if h_bits(mid) < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Probability(0.5 * (lo + hi)))
}

/// A finite probability distribution: nonnegative weights summing to 1
/// (within `1e-9`, checked at construction).
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    weights: Vec<f64>,
}

impl DiscreteDistribution {
    pub fn new(weights: Vec<f64>) -> Result<Self, InfoError> {
        if weights.is_empty() {
            return Err(InfoError::InvalidDistribution("no weights".into()));
        }
        for &w in &weights {
            if !w.is_finite() || !(0.0..=1.0).contains(&w) {
                return Err(InfoError::InvalidDistribution(format!(
                    "weight {w} is outside [0, 1]"
                )));
            }
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(InfoError::InvalidDistribution(format!(
                "weights sum to {total}, not 1"
            )));
        }
        Ok(DiscreteDistribution { weights })
    }

    /// The uniform distribution on `m` outcomes.
    pub fn uniform(m: usize) -> Self {
        assert!(m > 0, "uniform distribution needs at least one outcome");
        DiscreteDistribution { weights: vec![1.0 / m as f64; m] }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Shannon entropy in bits: `-sum w_i * log2(w_i)`, zero weights
    /// contributing nothing.
    pub fn entropy(&self) -> f64 {
        self.weights
            .iter()
            .filter(|&&w| w > 0.0)
            .map(|&w| -w * w.log2())
            .sum()
    }
}

// ---------------------------------------------------------------------------
