//! Linear codes with locality structure.
//!
//! A locally recoverable code here is always organized around a *repair
//! partition*: the `n` coordinates are split into contiguous groups of
//! `r + 1`, and within each group the code looks like a short *local code* of
//! length `r + 1` and distance at least `rho`, so that any `rho - 1` erasures
//! inside a group can be repaired from the group alone.
//!
//! Two local codes matter in practice and both are built here: the
//! `[r+1, r, 2]` single-parity code (plain locality) and the
//! `[2^m - 1, 2^m - 1 - m, 3]` Hamming codes (one extra erasure per group).
//! On top of those sit random LRC ensembles, codeword samplers, a locality
//! validator, and coset weight tables — the bookkeeping that turns a code
//! into channel statistics.
//!
//! Coset weight tables follow a fixed indexing convention: coset `i` is the
//! set of vectors whose syndrome under the stored parity-check matrix, read
//! as an integer (row `j` contributing `2^j`), equals `i`. For a Hamming
//! code with its canonical check matrix (columns = binary patterns
//! `1, 2, …, 2^m - 1` in ascending order) this makes the coset of the unit
//! vector `e_i` simply `i + 1`.

use std::io::{self, BufRead, Write};

use rand::Rng;
use thiserror::Error;

use crate::gf2::{BitMatrix, BitVector};
use crate::seeding;

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("generator rows are linearly dependent (rank {rank} < {rows} rows)")]
    RankDeficient { rank: usize, rows: usize },
    #[error("code has no information symbols")]
    EmptyCode,
    #[error("length {length} exceeds the exhaustive budget of {max}")]
    LengthBudget { length: usize, max: usize },
    #[error("Hamming order {0} not supported (need 2 <= m <= 5)")]
    InvalidHammingOrder(u32),
    #[error("block length {n} is not a multiple of r + 1 = {group}")]
    Divisibility { n: usize, group: usize },
    #[error("local code distance {distance} is below rho = {rho}")]
    LocalDistanceTooSmall { distance: usize, rho: u32 },
    #[error("rho = {0} must be at least 2")]
    RhoTooSmall(u32),
    #[error("could not draw a full-rank generator")]
    SamplingFailed,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn min_weight_of_span(m: &BitMatrix) -> Option<usize> {
    m.enumerate_span()
        .expect("span within enumeration budget")
        .map(|w| w.weight())
        .filter(|&w| w > 0)
        .min()
}

// ---------------------------------------------------------------------------
// LinearCode
// ---------------------------------------------------------------------------

/// A binary linear `[length, dimension, min_distance]` code, carried by a
/// full-row-rank generator matrix and a matching parity-check matrix.
///
/// The minimum distance is exact (exhaustive span scan at construction, which
/// caps `length` at 24 for [`LinearCode::from_generator`]).
#[derive(Debug, Clone)]
pub struct LinearCode {
    generator: BitMatrix,
    parity_check: BitMatrix,
    min_distance: usize,
}

impl LinearCode {
    /// Builds a code from a generator matrix: checks full row rank, derives a
    /// parity-check matrix, and measures the minimum distance exhaustively.
    pub fn from_generator(generator: BitMatrix) -> Result<Self, CodeError> {
        const MAX_LEN: usize = 24;
        if generator.rows() == 0 {
            return Err(CodeError::EmptyCode);
        }
        if generator.cols() > MAX_LEN {
            return Err(CodeError::LengthBudget { length: generator.cols(), max: MAX_LEN });
        }
        let rank = generator.rank();
        if rank != generator.rows() {
            return Err(CodeError::RankDeficient { rank, rows: generator.rows() });
        }
        let parity_check = generator.nullspace();
        let min_distance = min_weight_of_span(&generator).expect("nonzero dimension");
        Ok(LinearCode { generator, parity_check, min_distance })
    }

    /// Trusted constructor for codes whose distance is known by construction.
    fn from_parts(generator: BitMatrix, parity_check: BitMatrix, min_distance: usize) -> Self {
        debug_assert_eq!(generator.rank(), generator.rows());
        LinearCode { generator, parity_check, min_distance }
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn min_distance(&self) -> usize {
        self.min_distance
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &BitMatrix {
        &self.parity_check
    }

    /// Syndrome test: is `word` a codeword?
    pub fn contains(&self, word: &BitVector) -> bool {
        self.parity_check.mul_vector(word).weight() == 0
    }
}

/// The `[r+1, r, 2]` single-parity-check code: generator rows `e_j + e_r`,
/// parity check the all-ones row.
pub fn single_parity_code(r: u32) -> LinearCode {
    assert!(r >= 1, "locality r must be at least 1");
    let delta = r as usize + 1;
    let mut g = BitMatrix::zeros(r as usize, delta);
    for j in 0..r as usize {
        g.set(j, j, true);
        g.set(j, delta - 1, true);
    }
    let mut h = BitMatrix::zeros(1, delta);
    for c in 0..delta {
        h.set(0, c, true);
    }
    // Every generator row has weight 2 and every codeword has even weight.
    LinearCode::from_parts(g, h, 2)
}

/// The binary Hamming code of order `m`, `2 <= m <= 5`: parameters
/// `[2^m - 1, 2^m - 1 - m, 3]`, canonical parity-check columns
/// `1, 2, …, 2^m - 1` in ascending order.
pub fn hamming_code(m: u32) -> Result<LinearCode, CodeError> {
    if !(2..=5).contains(&m) {
        return Err(CodeError::InvalidHammingOrder(m));
    }
    let n = (1usize << m) - 1;
    let mut h = BitMatrix::zeros(m as usize, n);
    for c in 0..n {
        let pattern = c + 1;
        for j in 0..m as usize {
            if pattern >> j & 1 == 1 {
                h.set(j, c, true);
            }
        }
    }
    let g = h.nullspace();
    let min_distance = if n <= 24 {
        min_weight_of_span(&g).expect("nonzero dimension")
    } else {
        // m = 5: check columns are distinct and nonzero, and 1 ^ 2 = 3, so
        // the distance is 3 without scanning 2^26 codewords.
        3
    };
    Ok(LinearCode::from_parts(g, h, min_distance))
}

/// A uniformly random `[length, dimension]` code (resampled until the
/// generator has full row rank).
pub fn random_linear_code(
    length: usize,
    dimension: usize,
    seed: u64,
) -> Result<LinearCode, CodeError> {
    assert!(dimension <= length, "dimension exceeds length");
    for attempt in 0..64 {
        let mut rng = seeding::substream(seed, &[seeding::RANDOM_CODE, attempt]);
        let mut g = BitMatrix::zeros(dimension, length);
        for r in 0..dimension {
            for c in 0..length {
                if rng.gen::<bool>() {
                    g.set(r, c, true);
                }
            }
        }
        if g.rank() == dimension {
            return LinearCode::from_generator(g);
        }
    }
    Err(CodeError::SamplingFailed)
}

// ---------------------------------------------------------------------------
// Repair structure
// ---------------------------------------------------------------------------

/// The contiguous partition of `n` coordinates into groups of `r + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairPartition {
    n: usize,
    r: u32,
    groups: Vec<Vec<usize>>,
}

impl RepairPartition {
    pub fn contiguous(n: usize, r: u32) -> Result<Self, CodeError> {
        assert!(r >= 1, "locality r must be at least 1");
        let group = r as usize + 1;
        if n == 0 || !n.is_multiple_of(group) {
            return Err(CodeError::Divisibility { n, group });
        }
        let groups = (0..n / group)
            .map(|g| (g * group..(g + 1) * group).collect())
            .collect();
        Ok(RepairPartition { n, r, groups })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn num_groups(&self) -> usize {
        self.groups.len()
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }
}

/// An LRC ensemble description: repair partition plus the local code imposed
/// on every group, with the seed that fixes all random draws.
#[derive(Debug, Clone)]
pub struct LrcSpec {
    n: usize,
    r: u32,
    rho: u32,
    local_code: LinearCode,
    partition: RepairPartition,
    seed: u64,
}

impl LrcSpec {
    /// `local_code` must have length `r + 1` (which defines `r`) and distance
    /// at least `rho`, and `r + 1` must divide `n`.
    pub fn new(n: usize, rho: u32, local_code: LinearCode, seed: u64) -> Result<Self, CodeError> {
        if rho < 2 {
            return Err(CodeError::RhoTooSmall(rho));
        }
        if local_code.min_distance() < rho as usize {
            return Err(CodeError::LocalDistanceTooSmall {
                distance: local_code.min_distance(),
                rho,
            });
        }
        let r = (local_code.length() - 1) as u32;
        let partition = RepairPartition::contiguous(n, r)?;
        Ok(LrcSpec { n, r, rho, local_code, partition, seed })
    }

    /// Plain locality `r`: single-parity local code, `rho = 2`.
    pub fn single_parity(n: usize, r: u32, seed: u64) -> Result<Self, CodeError> {
        LrcSpec::new(n, 2, single_parity_code(r), seed)
    }

    /// Hamming local code of order `m`: locality `2^m - 2`, `rho = 3`.
    pub fn hamming(n: usize, m: u32, seed: u64) -> Result<Self, CodeError> {
        LrcSpec::new(n, 3, hamming_code(m)?, seed)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn rho(&self) -> u32 {
        self.rho
    }

    pub fn local_code(&self) -> &LinearCode {
        &self.local_code
    }

    pub fn partition(&self) -> &RepairPartition {
        &self.partition
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// A random `k x n` generator with locality `r`: within each repair group,
/// `r` columns are uniform and the last is their XOR, so every group carries
/// a single overall parity.
///
/// Column draws are keyed by `(seed, group)`, so any one group's columns are
/// reproducible independently of the rest.
pub fn linear_lrc_generator(
    n: usize,
    k: usize,
    r: u32,
    seed: u64,
) -> Result<BitMatrix, CodeError> {
    let group = r as usize + 1;
    if n == 0 || !n.is_multiple_of(group) {
        return Err(CodeError::Divisibility { n, group });
    }
    assert!(k >= 1, "dimension k must be at least 1");
    let mut g = BitMatrix::zeros(k, n);
    for gi in 0..n / group {
        let mut rng = seeding::substream(seed, &[seeding::GENERATOR_COLUMNS, gi as u64]);
        let base = gi * group;
        for j in 0..r as usize {
            for row in 0..k {
                if rng.gen::<bool>() {
                    g.set(row, base + j, true);
                }
            }
        }
        for row in 0..k {
            let parity = (0..r as usize).fold(false, |acc, j| acc ^ g.get(row, base + j));
            g.set(row, base + r as usize, parity);
        }
    }
    Ok(g)
}

/// One codeword of the block-diagonal code described by `spec`: each group
/// carries an independent, uniformly drawn local codeword. Draws are keyed by
/// `(spec.seed, trial, group)`.
pub fn sample_lrc_codeword(spec: &LrcSpec, trial: u64) -> BitVector {
    let k_loc = spec.local_code.dimension();
    let mut word = BitVector::zeros(spec.n);
    for (gi, coords) in spec.partition.groups().iter().enumerate() {
        let mut rng =
            seeding::substream(spec.seed, &[seeding::CODEWORD_SAMPLE, trial, gi as u64]);
        let mut msg = BitVector::zeros(k_loc);
        for b in 0..k_loc {
            if rng.gen::<bool>() {
                msg.set(b, true);
            }
        }
        let local = spec.local_code.generator().row_combination(&msg);
        for (j, &coord) in coords.iter().enumerate() {
            if local.get(j) {
                word.set(coord, true);
            }
        }
    }
    word
}

// ---------------------------------------------------------------------------
// Locality validation
// ---------------------------------------------------------------------------

/// Per-group minimum distances against a required `rho`. `distance == None`
/// means the group's projection is the zero code, which passes vacuously.
#[derive(Debug, Clone)]
pub struct LocalityReport {
    pub rho: u32,
    pub groups: Vec<GroupLocality>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupLocality {
    pub group: usize,
    pub distance: Option<usize>,
}

impl LocalityReport {
    pub fn passed(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn violations(&self) -> impl Iterator<Item = GroupLocality> + '_ {
        let rho = self.rho as usize;
        self.groups.iter().copied().filter(move |g| g.distance.is_some_and(|d| d < rho))
    }
}

/// Checks that the column span of `g` restricted to every repair group forms
/// a code of distance at least `rho`. Failures are reported, never thrown.
pub fn validate_locality(g: &BitMatrix, partition: &RepairPartition, rho: u32) -> LocalityReport {
    assert_eq!(g.cols(), partition.n(), "generator width disagrees with partition");
    let groups = partition
        .groups()
        .iter()
        .enumerate()
        .map(|(gi, coords)| {
            let sub = g.column_submatrix(coords).expect("partition within bounds");
            GroupLocality { group: gi, distance: min_weight_of_span(&sub) }
        })
        .collect();
    LocalityReport { rho, groups }
}

/// Same check for an explicit codebook: per group, the minimum pairwise
/// distance between distinct projections.
pub fn validate_locality_codebook(
    codebook: &[BitVector],
    partition: &RepairPartition,
    rho: u32,
) -> LocalityReport {
    let groups = partition
        .groups()
        .iter()
        .enumerate()
        .map(|(gi, coords)| {
            let projections: Vec<BitVector> = codebook
                .iter()
                .map(|word| {
                    assert_eq!(word.len(), partition.n(), "codeword length disagrees");
                    BitVector::from_bits(&coords.iter().map(|&c| word.get(c)).collect::<Vec<_>>())
                })
                .collect();
            let mut min = None;
            for (a, pa) in projections.iter().enumerate() {
                for pb in &projections[a + 1..] {
                    let d = pa.distance(pb).expect("equal lengths");
                    if d > 0 && min.is_none_or(|m| d < m) {
                        min = Some(d);
                    }
                }
            }
            GroupLocality { group: gi, distance: min }
        })
        .collect();
    LocalityReport { rho, groups }
}

// ---------------------------------------------------------------------------
// Coset weight tables
// ---------------------------------------------------------------------------

/// Weight distribution of every coset of a code: `counts(i)[w]` is the number
/// of weight-`w` vectors whose syndrome, read as an integer, equals `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetWeightTable {
    delta: usize,
    k_loc: usize,
    counts: Vec<Vec<u64>>,
}

impl CosetWeightTable {
    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn k_loc(&self) -> usize {
        self.k_loc
    }

    pub fn num_cosets(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self, coset: usize) -> &[u64] {
        &self.counts[coset]
    }

    /// The coset weight enumerator evaluated at `(1 - p, p)`:
    /// `sum_w counts[i][w] * p^w * (1-p)^(delta - w)` — the probability that a
    /// BSC(p) carries a transmitted codeword into coset `i`, shifted by the
    /// sent word.
    pub fn enumerator_value(&self, coset: usize, p: f64) -> f64 {
        self.counts[coset]
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(w, &c)| {
                c as f64 * p.powi(w as i32) * (1.0 - p).powi((self.delta - w) as i32)
            })
            .sum()
    }

    /// All coset enumerator values at once; sums to 1 for any `p`.
    pub fn enumerator_distribution(&self, p: f64) -> Vec<f64> {
        (0..self.num_cosets()).map(|i| self.enumerator_value(i, p)).collect()
    }

    /// Structural sanity: every coset holds `2^k` vectors and every weight
    /// class is fully distributed across cosets.
    fn check(&self) -> Result<(), CodeError> {
        let coset_size = 1u64 << self.k_loc;
        for (i, row) in self.counts.iter().enumerate() {
            if row.len() != self.delta + 1 {
                return Err(CodeError::Parse(format!("coset {i} has a ragged count row")));
            }
            if row.iter().sum::<u64>() != coset_size {
                return Err(CodeError::Parse(format!(
                    "coset {i} counts do not sum to 2^{}",
                    self.k_loc
                )));
            }
        }
        for w in 0..=self.delta {
            let total: u64 = self.counts.iter().map(|row| row[w]).sum();
            if total != binomial(self.delta, w) {
                return Err(CodeError::Parse(format!(
                    "weight-{w} counts do not sum to C({}, {w})",
                    self.delta
                )));
            }
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    let mut row = vec![0u64; n + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=n).rev() {
            row[j] += row[j - 1];
        }
    }
    row[k]
}

/// Classifies all `2^delta` vectors by syndrome. Exhaustive, so the code
/// length is capped at 20.
pub fn coset_weight_table(code: &LinearCode) -> Result<CosetWeightTable, CodeError> {
    const MAX_LEN: usize = 20;
    let delta = code.length();
    if delta > MAX_LEN {
        return Err(CodeError::LengthBudget { length: delta, max: MAX_LEN });
    }
    let h = code.parity_check();
    let m = h.rows();
    let col_pattern: Vec<u32> = (0..delta)
        .map(|c| (0..m).filter(|&j| h.get(j, c)).fold(0u32, |acc, j| acc | 1 << j))
        .collect();
    let mut counts = vec![vec![0u64; delta + 1]; 1usize << m];
    for v in 0u32..1u32 << delta {
        let mut syndrome = 0u32;
        let mut bits = v;
        while bits != 0 {
            syndrome ^= col_pattern[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        counts[syndrome as usize][v.count_ones() as usize] += 1;
    }
    let table = CosetWeightTable { delta, k_loc: code.dimension(), counts };
    debug_assert!(table.check().is_ok());
    Ok(table)
}

// ---------------------------------------------------------------------------
// Plain-text serialization
// ---------------------------------------------------------------------------

/// Writes a matrix as a `rows cols` header followed by one 0/1 row per line.
pub fn write_generator<W: Write>(g: &BitMatrix, mut out: W) -> io::Result<()> {
    writeln!(out, "{} {}", g.rows(), g.cols())?;
    for r in 0..g.rows() {
        writeln!(out, "{}", g.row(r))?;
    }
    Ok(())
}

/// Reads the format produced by [`write_generator`].
pub fn read_generator<R: BufRead>(input: R) -> Result<BitMatrix, CodeError> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .ok_or_else(|| CodeError::Parse("missing header".into()))??;
    let mut fields = header.split_whitespace();
    let rows: usize = parse_field(fields.next(), "row count")?;
    let cols: usize = parse_field(fields.next(), "column count")?;
    if fields.next().is_some() {
        return Err(CodeError::Parse("trailing fields in header".into()));
    }
    let mut g = BitMatrix::zeros(rows, cols);
    for r in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| CodeError::Parse(format!("missing row {r}")))??;
        let row = BitVector::from_str01(line.trim_end())
            .map_err(|e| CodeError::Parse(format!("row {r}: {e}")))?;
        if row.len() != cols {
            return Err(CodeError::Parse(format!(
                "row {r} has {} columns, expected {cols}",
                row.len()
            )));
        }
        for c in 0..cols {
            if row.get(c) {
                g.set(r, c, true);
            }
        }
    }
    for extra in lines {
        if !extra?.trim().is_empty() {
            return Err(CodeError::Parse("trailing rows after matrix".into()));
        }
    }
    Ok(g)
}

/// Writes a coset table as a `delta k_loc` header followed by `i w count`
/// triples (nonzero counts only, ascending).
pub fn write_coset_table<W: Write>(table: &CosetWeightTable, mut out: W) -> io::Result<()> {
    writeln!(out, "{} {}", table.delta(), table.k_loc())?;
    for i in 0..table.num_cosets() {
        for (w, &count) in table.counts(i).iter().enumerate() {
            if count > 0 {
                writeln!(out, "{i} {w} {count}")?;
            }
        }
    }
    Ok(())
}

/// Reads the format produced by [`write_coset_table`], re-checking the table
/// invariants so corrupt files are rejected.
pub fn read_coset_table<R: BufRead>(input: R) -> Result<CosetWeightTable, CodeError> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .ok_or_else(|| CodeError::Parse("missing header".into()))??;
    let mut fields = header.split_whitespace();
    let delta: usize = parse_field(fields.next(), "delta")?;
    let k_loc: usize = parse_field(fields.next(), "k_loc")?;
    if fields.next().is_some() {
        return Err(CodeError::Parse("trailing fields in header".into()));
    }
    if k_loc > delta || delta > 24 {
        return Err(CodeError::Parse(format!("implausible dimensions {delta} {k_loc}")));
    }
    let mut counts = vec![vec![0u64; delta + 1]; 1usize << (delta - k_loc)];
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let i: usize = parse_field(fields.next(), "coset index")?;
        let w: usize = parse_field(fields.next(), "weight")?;
        let count: u64 = parse_field(fields.next(), "count")?;
        if fields.next().is_some() {
            return Err(CodeError::Parse(format!("trailing fields in row {i} {w}")));
        }
        if i >= counts.len() || w > delta {
            return Err(CodeError::Parse(format!("entry ({i}, {w}) out of range")));
        }
        if counts[i][w] != 0 {
            return Err(CodeError::Parse(format!("duplicate entry ({i}, {w})")));
        }
        counts[i][w] = count;
    }
    let table = CosetWeightTable { delta, k_loc, counts };
    table.check()?;
    Ok(table)
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, what: &str) -> Result<T, CodeError> {
    field
        .ok_or_else(|| CodeError::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|_| CodeError::Parse(format!("malformed {what}")))
}

// ---------------------------------------------------------------------------
