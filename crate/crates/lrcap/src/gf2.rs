//! Dense linear algebra over GF(2), bit-packed into `u64` words.
//!
//! Everything the code machinery needs: rank, consistent-system solving,
//! nullspace bases, column selection, and streaming enumeration of row
//! spans. Row operations work a word at a time, so matrices in the hundreds
//! of rows/columns are cheap.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum Gf2Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("rows have differing lengths")]
    RaggedRows,
    #[error("column index {index} out of range for {cols} columns")]
    ColumnOutOfRange { index: usize, cols: usize },
    #[error("rhs has {rhs_len} entries but the matrix has {rows} rows")]
    RhsMismatch { rhs_len: usize, rows: usize },
    #[error("span of rank {rank} exceeds the 2^24 enumeration budget")]
    SpanTooLarge { rank: usize },
    #[error("invalid bit character {0:?} (expected '0' or '1')")]
    ParseBit(char),
}

const WORD_BITS: usize = 64;

#[inline]
fn word_index(bit: usize) -> (usize, u64) {
    (bit / WORD_BITS, 1u64 << (bit % WORD_BITS))
}

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

// ---------------------------------------------------------------------------
// BitVector
// ---------------------------------------------------------------------------

/// A fixed-length vector over GF(2). Bits beyond `len` in the last word are
/// kept zero, so `weight` and equality are plain word operations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector { len, words: vec![0; words_for(len)] }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parses a string of `0`/`1` characters.
    pub fn from_str01(s: &str) -> Result<Self, Gf2Error> {
        let mut v = BitVector::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => return Err(Gf2Error::ParseBit(other)),
            }
        }
        Ok(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let (w, mask) = word_index(i);
        self.words[w] & mask != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let (w, mask) = word_index(i);
        if value {
            self.words[w] |= mask;
        } else {
            self.words[w] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of differing lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Hamming distance to `other`.
    pub fn distance(&self, other: &BitVector) -> Result<usize, Gf2Error> {
        if self.len != other.len {
            return Err(Gf2Error::LengthMismatch { left: self.len, right: other.len });
        }
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "dot of differing lengths");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    fn words(&self) -> &[u64] {
        &self.words
    }
}

impl std::str::FromStr for BitVector {
    type Err = Gf2Error;

    fn from_str(s: &str) -> Result<Self, Gf2Error> {
        BitVector::from_str01(s)
    }
}

impl std::fmt::Display for BitVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for BitVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitVector({self})")
    }
}

// ---------------------------------------------------------------------------
// BitMatrix
// ---------------------------------------------------------------------------

/// A dense GF(2) matrix stored row-major, one word-aligned stride per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Outcome of solving `M x = rhs` over GF(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    /// Exactly one solution.
    Unique(BitVector),
    /// Consistent but underdetermined (rank below the number of unknowns).
    Ambiguous,
    /// No solution.
    Inconsistent,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[BitVector]) -> Result<Self, Gf2Error> {
        let cols = rows.first().map_or(0, BitVector::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Gf2Error::RaggedRows);
        }
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            m.row_words_mut(i)[..row.words().len()].copy_from_slice(row.words());
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        let (w, mask) = word_index(c);
        self.data[r * self.stride + w] & mask != 0
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        let (w, mask) = word_index(c);
        let word = &mut self.data[r * self.stride + w];
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    pub fn row(&self, r: usize) -> BitVector {
        BitVector { len: self.cols, words: self.row_words(r).to_vec() }
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn xor_rows(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let (s, d) = (src * self.stride, dst * self.stride);
        for w in 0..self.stride {
            let bits = self.data[s + w];
            self.data[d + w] ^= bits;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// Sum of the rows selected by `coeffs` — i.e. `coeffs * M` with `coeffs`
    /// a row vector. This is message encoding when `M` is a generator matrix.
    pub fn row_combination(&self, coeffs: &BitVector) -> BitVector {
        assert_eq!(coeffs.len(), self.rows, "coefficient length mismatch");
        let mut acc = BitVector::zeros(self.cols);
        for r in 0..self.rows {
            if coeffs.get(r) {
                for (a, &w) in acc.words.iter_mut().zip(self.row_words(r)) {
                    *a ^= w;
                }
            }
        }
        acc
    }

    /// `M * v` with `v` a column vector — syndrome computation when `M` is a
    /// parity-check matrix.
    pub fn mul_vector(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            let ones: u32 = self
                .row_words(r)
                .iter()
                .zip(v.words())
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            if ones % 2 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// Matrix rank by row elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut pivot = 0;
        for c in 0..m.cols {
            let (w, mask) = word_index(c);
            let Some(hit) = (pivot..m.rows).find(|&r| m.data[r * m.stride + w] & mask != 0)
            else {
                continue;
            };
            m.swap_rows(hit, pivot);
            for r in pivot + 1..m.rows {
                if m.data[r * m.stride + w] & mask != 0 {
                    m.xor_rows(pivot, r);
                }
            }
            pivot += 1;
            if pivot == m.rows {
                break;
            }
        }
        pivot
    }

    /// Copies out the given columns, in the given order.
    pub fn column_submatrix(&self, keep: &[usize]) -> Result<BitMatrix, Gf2Error> {
        for &c in keep {
            if c >= self.cols {
                return Err(Gf2Error::ColumnOutOfRange { index: c, cols: self.cols });
            }
        }
        let mut sub = BitMatrix::zeros(self.rows, keep.len());
        for r in 0..self.rows {
            for (j, &c) in keep.iter().enumerate() {
                if self.get(r, c) {
                    sub.set(r, j, true);
                }
            }
        }
        Ok(sub)
    }

    /// Solves `M x = rhs`, classifying the system as uniquely solvable,
    /// ambiguous, or inconsistent.
    pub fn solve(&self, rhs: &BitVector) -> Result<Solution, Gf2Error> {
        if rhs.len() != self.rows {
            return Err(Gf2Error::RhsMismatch { rhs_len: rhs.len(), rows: self.rows });
        }
        let mut m = self.clone();
        let mut b = rhs.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot = 0;
        for c in 0..m.cols {
            let (w, mask) = word_index(c);
            let Some(hit) = (pivot..m.rows).find(|&r| m.data[r * m.stride + w] & mask != 0)
            else {
                continue;
            };
            m.swap_rows(hit, pivot);
            if hit != pivot {
                let (bh, bp) = (b.get(hit), b.get(pivot));
                b.set(hit, bp);
                b.set(pivot, bh);
            }
            for r in 0..m.rows {
                if r != pivot && m.data[r * m.stride + w] & mask != 0 {
                    m.xor_rows(pivot, r);
                    let flipped = b.get(r) ^ b.get(pivot);
                    b.set(r, flipped);
                }
            }
            pivot_cols.push(c);
            pivot += 1;
            if pivot == m.rows {
                break;
            }
        }
        // Rows below the last pivot are all-zero; a set rhs bit there means
        // the system has no solution.
        for r in pivot..m.rows {
            if b.get(r) {
                return Ok(Solution::Inconsistent);
            }
        }
        if pivot < m.cols {
            return Ok(Solution::Ambiguous);
        }
        let mut x = BitVector::zeros(m.cols);
        for (t, &c) in pivot_cols.iter().enumerate() {
            x.set(c, b.get(t));
        }
        Ok(Solution::Unique(x))
    }

    /// A basis of the right nullspace `{x : M x = 0}`, one vector per row of
    /// the result. Deterministic: free-column vectors in ascending order.
    pub fn nullspace(&self) -> BitMatrix {
        let (rref, pivot_cols) = self.reduced_row_echelon();
        let pivot_set: std::collections::HashSet<usize> = pivot_cols.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = BitMatrix::zeros(free.len(), self.cols);
        for (i, &f) in free.iter().enumerate() {
            basis.set(i, f, true);
            for (t, &c) in pivot_cols.iter().enumerate() {
                if rref.get(t, f) {
                    basis.set(i, c, true);
                }
            }
        }
        basis
    }

    /// Streaming enumeration of the row span, each element exactly once
    /// (Gray-code order). Errors when the span would exceed `2^24` elements.
    pub fn enumerate_span(&self) -> Result<SpanIter, Gf2Error> {
        let (rref, pivot_cols) = self.reduced_row_echelon();
        let rank = pivot_cols.len();
        if rank > 24 {
            return Err(Gf2Error::SpanTooLarge { rank });
        }
        let basis: Vec<BitVector> = (0..rank).map(|r| rref.row(r)).collect();
        Ok(SpanIter {
            basis,
            current: BitVector::zeros(self.cols),
            index: 0,
            total: 1u64 << rank,
        })
    }

    /// Reduced row echelon form plus the pivot columns.
    fn reduced_row_echelon(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot = 0;
        for c in 0..m.cols {
            let (w, mask) = word_index(c);
            let Some(hit) = (pivot..m.rows).find(|&r| m.data[r * m.stride + w] & mask != 0)
            else {
                continue;
            };
            m.swap_rows(hit, pivot);
            for r in 0..m.rows {
                if r != pivot && m.data[r * m.stride + w] & mask != 0 {
                    m.xor_rows(pivot, r);
                }
            }
            pivot_cols.push(c);
            pivot += 1;
            if pivot == m.rows {
                break;
            }
        }
        (m, pivot_cols)
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r))?;
        }
        write!(f, "]")
    }
}

/// Iterator over all elements of a row span. See [`BitMatrix::enumerate_span`].
pub struct SpanIter {
    basis: Vec<BitVector>,
    current: BitVector,
    index: u64,
    total: u64,
}

impl Iterator for SpanIter {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        if self.index == self.total {
            return None;
        }
        if self.index > 0 {
            // Gray step: g(i-1) -> g(i) flips bit tz(i).
            let flip = self.index.trailing_zeros() as usize;
            self.current.xor_assign(&self.basis[flip]);
        }
        self.index += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for SpanIter {}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn matrix(rows: &[&str]) -> BitMatrix {
        let rows: Vec<BitVector> =
            rows.iter().map(|s| BitVector::from_str01(s).unwrap()).collect();
        BitMatrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn weight_and_distance() {
        let a = BitVector::from_str01("0110").unwrap();
        let b = BitVector::from_str01("1010").unwrap();
        assert_eq!(a.weight(), 2);
        assert_eq!(a.distance(&b).unwrap(), 2);
        assert_eq!(a.distance(&a).unwrap(), 0);
        let short = BitVector::zeros(3);
        assert!(a.distance(&short).is_err());
    }

    #[test]
    fn display_round_trip() {
        let v = BitVector::from_str01("10011010011").unwrap();
        assert_eq!(v.to_string().parse::<BitVector>().unwrap(), v);
        assert!(BitVector::from_str01("01x").is_err());
    }

    #[test]
    fn rank_of_known_matrices() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(BitMatrix::zeros(4, 6).rank(), 0);
        assert_eq!(matrix(&["110", "011", "101"]).rank(), 2);
    }

    #[test]
    fn column_submatrix_selects_in_order() {
        let m = matrix(&["1010", "0111"]);
        let sub = m.column_submatrix(&[2, 0]).unwrap();
        assert_eq!(sub.row(0).to_string(), "11");
        assert_eq!(sub.row(1).to_string(), "10");
        assert!(m.column_submatrix(&[4]).is_err());
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let rhs = BitVector::from_str01("101").unwrap();
        let sol = BitMatrix::identity(3).solve(&rhs).unwrap();
        assert_eq!(sol, Solution::Unique(rhs));
    }

    #[test]
    fn solve_zero_matrix() {
        let zero = BitMatrix::zeros(3, 2);
        assert_eq!(zero.solve(&BitVector::zeros(3)).unwrap(), Solution::Ambiguous);
        let mut one = BitVector::zeros(3);
        one.set(1, true);
        assert_eq!(zero.solve(&one).unwrap(), Solution::Inconsistent);
    }

    #[test]
    fn solve_rejects_bad_rhs_length() {
        assert!(BitMatrix::identity(3).solve(&BitVector::zeros(2)).is_err());
    }

    #[test]
    fn span_of_zero_matrix_is_one_vector() {
        let span: Vec<_> = BitMatrix::zeros(2, 5).enumerate_span().unwrap().collect();
        assert_eq!(span, vec![BitVector::zeros(5)]);
    }

    #[test]
    fn span_budget_is_enforced() {
        assert!(matches!(
            BitMatrix::identity(25).enumerate_span(),
            Err(Gf2Error::SpanTooLarge { rank: 25 })
        ));
    }

    // Systematic [7,4] Hamming generator; its span must show the classic
    // weight profile (1,0,0,7,7,0,0,1).
    #[test]
    fn hamming_weight_profile_from_span() {
        let g = matrix(&["1000110", "0100011", "0010111", "0001101"]);
        let mut profile = [0usize; 8];
        let mut seen = HashSet::new();
        for word in g.enumerate_span().unwrap() {
            profile[word.weight()] += 1;
            assert!(seen.insert(word));
        }
        assert_eq!(profile, [1, 0, 0, 7, 7, 0, 0, 1]);
    }

    #[test]
    fn nullspace_is_orthogonal_complement() {
        let g = matrix(&["1000110", "0100011", "0010111", "0001101"]);
        let ns = g.nullspace();
        assert_eq!(ns.rows(), 3);
        assert_eq!(ns.rank(), 3);
        for i in 0..ns.rows() {
            let h_row = ns.row(i);
            for r in 0..g.rows() {
                assert!(!g.row(r).dot(&h_row));
            }
        }
    }

    #[test]
    fn row_combination_and_mul_vector() {
        let g = matrix(&["110", "011"]);
        let msg = BitVector::from_str01("11").unwrap();
        assert_eq!(g.row_combination(&msg).to_string(), "101");
        let v = BitVector::from_str01("111").unwrap();
        assert_eq!(g.mul_vector(&v).to_string(), "00");
    }

    fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
        (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::bool::ANY, r * c).prop_map(
                move |bits| {
                    let mut m = BitMatrix::zeros(r, c);
                    for (i, b) in bits.into_iter().enumerate() {
                        if b {
                            m.set(i / c, i % c, true);
                        }
                    }
                    m
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in arb_matrix(20, 20)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn span_size_is_two_to_rank(m in arb_matrix(6, 9)) {
            let span: HashSet<BitVector> = m.enumerate_span().unwrap().collect();
            prop_assert_eq!(span.len(), 1usize << m.rank());
        }

        #[test]
        fn solve_finds_planted_solutions(
            m in arb_matrix(8, 8),
            xbits in proptest::collection::vec(proptest::bool::ANY, 8),
        ) {
            let x = BitVector::from_bits(&xbits[..m.cols()]);
            let rhs = m.mul_vector(&x);
            match m.solve(&rhs).unwrap() {
                Solution::Unique(s) => {
                    prop_assert_eq!(m.mul_vector(&s), rhs);
                    prop_assert_eq!(m.rank(), m.cols());
                }
                Solution::Ambiguous => prop_assert!(m.rank() < m.cols()),
                Solution::Inconsistent => {
                    prop_assert!(false, "planted system classified inconsistent")
                }
            }
        }

        #[test]
        fn column_submatrix_of_all_columns_is_identity_op(m in arb_matrix(6, 10)) {
            let all: Vec<usize> = (0..m.cols()).collect();
            prop_assert_eq!(m.column_submatrix(&all).unwrap(), m);
        }
    }
}
