//! Dense exact rational matrices and Gauss-Jordan elimination.

use num::{One, Zero};

use crate::error::CoreError;
use crate::scalar::{zeros, Scalar};

/// A linear map stored as a dense row-major matrix. Maps act on column
/// vectors: `m.apply(v)` has length `m.rows()` for `v` of length `m.cols()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Result of reduced row-echelon elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// The reduced row-echelon form of the input.
    pub matrix: LinMap,
    /// Number of nonzero rows (= number of pivots).
    pub rank: usize,
    /// Column index of each pivot, one per nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl LinMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LinMap { rows, cols, entries: zeros(rows * cols) }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = LinMap::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        LinMap { rows, cols, entries }
    }

    /// Builds a matrix from a list of rows, all of length `cols` (`cols` is
    /// given separately so zero-row matrices keep their width).
    pub fn from_rows(cols: usize, rows: &[Vec<Scalar>]) -> Result<Self, CoreError> {
        for row in rows {
            if row.len() != cols {
                return Err(CoreError::DimMismatch {
                    what: "matrix row length",
                    expected: cols,
                    got: row.len(),
                });
            }
        }
        Ok(LinMap { rows: rows.len(), cols, entries: rows.concat() })
    }

    /// Builds from integer rows; handy for fixtures.
    pub fn from_int_rows(cols: usize, rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&n| crate::scalar::int(n)).collect()).collect();
        LinMap::from_rows(cols, &rows).expect("integer rows of equal length")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, CoreError> {
        if v.len() != self.cols {
            return Err(CoreError::DimMismatch {
                what: "matrix-vector product",
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = zeros(self.rows);
        for r in 0..self.rows {
            let row = self.row(r);
            for (a, x) in row.iter().zip(v) {
                if !a.is_zero() && !x.is_zero() {
                    out[r] += a * x;
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ inner` as matrices (`self * inner`).
    pub fn compose(&self, inner: &LinMap) -> Result<LinMap, CoreError> {
        if self.cols != inner.rows {
            return Err(CoreError::DimMismatch {
                what: "matrix product",
                expected: self.cols,
                got: inner.rows,
            });
        }
        let mut out = LinMap::zero(self.rows, inner.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..inner.cols {
                    let b = inner.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c) + a * b;
                        out.set(r, c, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap, CoreError> {
        self.zip_entries(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap, CoreError> {
        self.zip_entries(other, |a, b| a - b)
    }

    fn zip_entries(
        &self,
        other: &LinMap,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<LinMap, CoreError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(CoreError::DimMismatch {
                what: "matrix shapes",
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(LinMap { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, k: &Scalar) -> LinMap {
        LinMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * k).collect(),
        }
    }

    pub fn transpose(&self) -> LinMap {
        LinMap::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// The matrix entries flattened row-major (the vectorization used by the
    /// cocycle-space computation).
    pub fn to_flat_vec(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    /// Inverse of [`to_flat_vec`](Self::to_flat_vec).
    pub fn from_flat_vec(rows: usize, cols: usize, flat: &[Scalar]) -> Result<Self, CoreError> {
        if flat.len() != rows * cols {
            return Err(CoreError::DimMismatch {
                what: "flattened matrix length",
                expected: rows * cols,
                got: flat.len(),
            });
        }
        Ok(LinMap { rows, cols, entries: flat.to_vec() })
    }

    /// Reduced row-echelon form: pivots are 1, pivot columns are otherwise
    /// zero, zero rows sink to the bottom. The RREF of a matrix is the
    /// canonical representative of its row space.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            let Some(pivot_row) = (lead..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, pivot_row);
            let inv = m.get(lead, col).recip();
            m.scale_row(lead, &inv);
            for r in 0..m.rows {
                if r != lead && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.subtract_scaled_row(r, lead, &factor);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        Echelon { matrix: m, rank: pivots.len(), pivots }
    }

    /// Rank of the matrix.
    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A canonical basis of `{x : self * x = 0}` as a subspace of the domain.
    pub fn kernel_basis(&self) -> crate::subspace::Subspace {
        let ech = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut gens: Vec<Vec<Scalar>> = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = zeros(self.cols);
            v[free] = Scalar::one();
            for (row, &p) in ech.pivots.iter().enumerate() {
                v[p] = -ech.matrix.get(row, free).clone();
            }
            gens.push(v);
        }
        crate::subspace::Subspace::from_rows(self.cols, &gens)
            .expect("kernel generators have ambient length")
    }

    /// Exact inverse, or `None` when the matrix is singular or non-square.
    pub fn inverse(&self) -> Option<LinMap> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        // Eliminate on [self | I] and read the inverse off the right block.
        let mut aug = LinMap::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let ech = aug.rref();
        if ech.rank < n || ech.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        aug = ech.matrix;
        Some(LinMap::from_fn(n, n, |r, c| aug.get(r, n + c).clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, k: &Scalar) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            if !self.entries[idx].is_zero() {
                self.entries[idx] *= k;
            }
        }
    }

    /// `row[r] -= k * row[src]`.
    fn subtract_scaled_row(&mut self, r: usize, src: usize, k: &Scalar) {
        for c in 0..self.cols {
            let v = self.entries[src * self.cols + c].clone();
            if !v.is_zero() {
                self.entries[r * self.cols + c] -= k * v;
            }
        }
    }
}
