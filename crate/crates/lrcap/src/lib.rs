//! Capacity analysis for locally recoverable codes (LRCs) on binary-input
//! channels.
//!
//! An LRC of locality `r` partitions its `n` coordinates into repair groups of
//! size `r + 1` so that any single coordinate can be rebuilt from the other
//! members of its group. That convenience costs capacity: on an erasure
//! channel with erasure probability `p` the best achievable rate drops from
//! the Shannon capacity `1 - p` to
//!
//! ```text
//! Cap_BEC(p, r) = 1 - p - (1 - p)^(r+1) / (r + 1)
//! ```
//!
//! and this crate computes that value exactly, together with upper and lower
//! bounds for the binary symmetric channel, for arbitrary binary-input
//! channels given only their Shannon capacity, and for stronger locality
//! (`rho - 1` erasures per group). The closed forms are backed by exhaustive
//! coset-weight computations over small linear codes and by seeded Monte
//! Carlo experiments, so every formula here can be cross-checked from first
//! principles.
//!
//! # Modules
//!
//! | module        | contents                                                    |
//! |---------------|-------------------------------------------------------------|
//! | [`infofn`]    | binary entropy, its inverse, discrete entropy               |
//! | [`gf2`]       | bit-packed vectors/matrices over GF(2): rank, solve, spans  |
//! | [`codes`]     | single-parity and Hamming local codes, LRC ensembles, coset weight tables |
//! | [`blockstats`]| exact per-symbol mutual information of one repair block     |
//! | [`capacity`]  | capacity values, bounds, and gaps for BEC/BSC/general channels |
//! | [`experiments`]| seeded Monte Carlo: erasure counts, rank of random LRCs, decoding |
//! | [`cli`]       | the `lrcap` command line (capacity, curves, verify, simulate, cosets) |
//!
//! # Examples
//!
//! The `examples/` directory is the quickest tour; each one is runnable on
//! its own:
//!
//! ```text
//! cargo run --release -p lrcap --example capacity_table
//! cargo run --release -p lrcap --example capacity_curves
//! cargo run --release -p lrcap --example coset_tables
//! cargo run --release -p lrcap --example erasure_experiment
//! cargo run --release -p lrcap --example end_to_end_bec
//! cargo run --release -p lrcap --example ml_decoding_trend
//! ```
//!
//! The same functionality is exposed as a thin binary:
//!
//! ```text
//! lrcap capacity --channel bec --p 0.5 --r 2
//! lrcap curves --channel bsc --r 2 --p-min 0 --p-max 0.5 --p-step 0.01 --out bsc.csv
//! lrcap verify
//! ```
//!
//! # A taste
//!
//! ```
//! use lrcap::capacity::{cap_bec_lrc, gap};
//! use lrcap::infofn::Probability;
//!
//! let p = Probability::new(0.5).unwrap();
//! let cap = cap_bec_lrc(p, 2);
//! assert!((cap.value - 11.0 / 24.0).abs() < 1e-12);
//! assert!((gap(0.5, cap.value) - 1.0 / 24.0).abs() < 1e-12);
//! ```

pub mod blockstats;
pub mod capacity;
pub mod cli;
pub mod codes;
pub mod experiments;
pub mod gf2;
pub mod infofn;

pub(crate) mod seeding;

pub use blockstats::BlockChannel;
pub use capacity::CapacityResult;
pub use codes::LinearCode;
pub use experiments::TrialReport;
pub use gf2::{BitMatrix, BitVector};
pub use infofn::Probability;
