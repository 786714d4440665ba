//! Sparse matrices over F2.
//!
//! Storage is column-major: each column is the sorted list of row indices
//! holding a one. Reduction converts columns to dense bitsets and eliminates
//! against a pivot table keyed by the lowest set row.

use std::fmt;

/// Dense bitset used as the working representation during elimination.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub(crate) fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub(crate) fn from_indices(len: usize, idx: &[u32]) -> Self {
        let mut v = Self::zeros(len);
        for &i in idx {
            v.flip(i as usize);
        }
        v
    }

    #[inline]
    pub(crate) fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    #[inline]
    pub(crate) fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub(crate) fn lowest(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub(crate) fn ones(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros();
                out.push((i * 64) as u32 + b);
                w &= w - 1;
            }
        }
        out
    }
}

/// Result of column reduction: rank, pivot structure, and optionally a kernel basis.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub rank: usize,
    /// Columns that became pivots, in processing order.
    pub pivot_columns: Vec<usize>,
    /// Kernel vectors (as sorted column-index sets), present when requested.
    pub kernel: Option<Vec<Vec<u32>>>,
}

/// A sparse `rows × cols` matrix over F2.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseF2Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<u32>>,
}

impl fmt::Debug for SparseF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseF2Matrix({}x{}, nnz={})", self.rows, self.cols, self.nnz())
    }
}

impl SparseF2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseF2Matrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseF2Matrix {
            rows: n,
            cols: n,
            columns: (0..n as u32).map(|i| vec![i]).collect(),
        }
    }

    /// Builds a matrix from columns of row indices. Repeated indices within a
    /// column are summed over F2, so a pair cancels.
    ///
    /// Panics if an index is out of bounds or the column count differs from `cols`.
    pub fn from_columns(rows: usize, cols: usize, columns: Vec<Vec<u32>>) -> Self {
        assert_eq!(columns.len(), cols, "column count mismatch");
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                let mut out: Vec<u32> = Vec::with_capacity(c.len());
                for r in c {
                    assert!((r as usize) < rows, "row index {r} out of bounds ({rows})");
                    if out.last() == Some(&r) {
                        out.pop();
                    } else {
                        out.push(r);
                    }
                }
                out
            })
            .collect();
        SparseF2Matrix {
            rows,
            cols,
            columns,
        }
    }

    /// Builds a matrix from `(row, col)` positions; duplicated positions cancel.
    pub fn from_entries(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut columns = vec![Vec::new(); cols];
        for (r, c) in entries {
            assert!(c < cols, "column index {c} out of bounds ({cols})");
            columns[c].push(r as u32);
        }
        Self::from_columns(rows, cols, columns)
    }

    /// Dense 0/1 rows, mostly for tests and small displays.
    pub fn from_dense(rows: &[Vec<u8>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let entries = rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| **v & 1 == 1)
                .map(move |(j, _)| (i, j))
        });
        Self::from_entries(nrows, ncols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[u32] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.columns[c].binary_search(&(r as u32)).is_ok()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&r| (r as usize, c)))
    }

    /// Flips a single entry.
    pub fn toggle(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols);
        let col = &mut self.columns[c];
        match col.binary_search(&(r as u32)) {
            Ok(i) => {
                col.remove(i);
            }
            Err(i) => col.insert(i, r as u32),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut columns = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &r in col {
                columns[r as usize].push(c as u32);
            }
        }
        SparseF2Matrix {
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    /// Applies the matrix to a sparse vector given by its support.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let mut acc = BitVec::zeros(self.rows);
        for &c in v {
            for &r in &self.columns[c as usize] {
                acc.flip(r as usize);
            }
        }
        acc.ones()
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseF2Matrix) -> SparseF2Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let columns = rhs.columns.iter().map(|c| self.apply(c)).collect();
        SparseF2Matrix {
            rows: self.rows,
            cols: rhs.cols,
            columns,
        }
    }

    pub fn add(&self, rhs: &SparseF2Matrix) -> SparseF2Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(a, b)| sym_diff(a, b))
            .collect();
        SparseF2Matrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &SparseF2Matrix) -> SparseF2Matrix {
        assert_eq!(self.rows, rhs.rows);
        let mut columns = self.columns.clone();
        columns.extend(rhs.columns.iter().cloned());
        SparseF2Matrix {
            rows: self.rows,
            cols: self.cols + rhs.cols,
            columns,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_vectors(rows: usize, vectors: Vec<Vec<u32>>) -> SparseF2Matrix {
        let cols = vectors.len();
        Self::from_columns(rows, cols, vectors)
    }

    pub fn reduce(&self, want_kernel: bool) -> Reduction {
        let mut pivot_of_row: Vec<Option<usize>> = vec![None; self.rows];
        let mut reduced: Vec<(BitVec, Option<BitVec>)> = Vec::new();
        let mut pivot_columns = Vec::new();
        let mut kernel = want_kernel.then(Vec::new);

        for (c, col) in self.columns.iter().enumerate() {
            if col.is_empty() && !want_kernel {
                continue;
            }
            let mut v = BitVec::from_indices(self.rows, col);
            let mut combo = want_kernel.then(|| {
                let mut b = BitVec::zeros(self.cols);
                b.flip(c);
                b
            });
            while let Some(low) = v.lowest() {
                match pivot_of_row[low] {
                    Some(p) => {
                        let (pv, pc) = &reduced[p];
                        v.xor_assign(pv);
                        if let (Some(cb), Some(pc)) = (combo.as_mut(), pc.as_ref()) {
                            cb.xor_assign(pc);
                        }
                    }
                    None => break,
                }
            }
            match v.lowest() {
                Some(low) => {
                    pivot_of_row[low] = Some(reduced.len());
                    reduced.push((v, combo));
                    pivot_columns.push(c);
                }
                None => {
                    if let (Some(k), Some(cb)) = (kernel.as_mut(), combo) {
                        k.push(cb.ones());
                    }
                }
            }
        }
        Reduction {
            rank: reduced.len(),
            pivot_columns,
            kernel,
        }
    }

    /// Rank over F2.
    pub fn rank(&self) -> usize {
        self.reduce(false).rank
    }

    /// A basis of the null space, each vector given by its support.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        self.reduce(true).kernel.unwrap_or_default()
    }

    /// A basis of the column space: the original columns at pivot positions.
    pub fn image_basis(&self) -> Vec<Vec<u32>> {
        self.reduce(false)
            .pivot_columns
            .into_iter()
            .map(|c| self.columns[c].clone())
            .collect()
    }
}

fn sym_diff(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent dense Gaussian elimination on byte rows.
    fn dense_rank(rows: &[Vec<u8>]) -> usize {
        let mut m: Vec<Vec<u8>> = rows.to_vec();
        let ncols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&r| m[r][col] == 1) else {
                continue;
            };
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && m[r][col] == 1 {
                    for k in 0..ncols {
                        m[r][k] ^= m[rank][k];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn random_dense(seed: u64, r: usize, c: usize) -> Vec<Vec<u8>> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..r)
            .map(|_| (0..c).map(|_| rng.gen_range(0..2u8)).collect())
            .collect()
    }

    #[test]
    fn identity_has_full_rank() {
        assert_eq!(SparseF2Matrix::identity(3).rank(), 3);
    }

    #[test]
    fn equal_rows_rank_one() {
        let m = SparseF2Matrix::from_dense(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn random_20x20_matches_dense_oracle() {
        for seed in 0..20 {
            let d = random_dense(seed, 20, 20);
            assert_eq!(SparseF2Matrix::from_dense(&d).rank(), dense_rank(&d), "seed {seed}");
        }
    }

    #[test]
    fn duplicate_entries_cancel() {
        let m = SparseF2Matrix::from_entries(2, 2, [(0, 0), (0, 0), (1, 1)]);
        assert!(!m.get(0, 0));
        assert!(m.get(1, 1));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let d = random_dense(7, 9, 15);
        let m = SparseF2Matrix::from_dense(&d);
        let ker = m.kernel_basis();
        assert_eq!(ker.len() + m.rank(), 15);
        for v in &ker {
            assert!(m.apply(v).is_empty());
        }
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(seed in 0u64..10_000, r in 1usize..24, c in 1usize..24) {
            let d = random_dense(seed, r, c);
            let m = SparseF2Matrix::from_dense(&d);
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert_eq!(m.rank(), dense_rank(&d));
        }

        #[test]
        fn rank_nullity(seed in 0u64..10_000, r in 1usize..24, c in 1usize..24) {
            let m = SparseF2Matrix::from_dense(&random_dense(seed, r, c));
            prop_assert_eq!(m.kernel_basis().len() + m.rank(), c);
            prop_assert_eq!(m.image_basis().len(), m.rank());
        }
    }
}
