//! Subspaces of Q^n in canonical (RREF) form, with sums, intersections and
//! membership/quotient queries.

use num::Zero;

use crate::error::CoreError;
use crate::matrix::LinMap;
use crate::scalar::{is_zero_vec, zeros, Scalar};

/// A linear subspace of Q^ambient. The basis is stored as the nonzero rows of
/// a reduced row-echelon matrix, so two equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// `dim × ambient` matrix whose rows are the canonical basis.
    basis: LinMap,
}

impl Subspace {
    /// Spans the given generators (which may be dependent or zero).
    pub fn from_rows(ambient: usize, gens: &[Vec<Scalar>]) -> Result<Self, CoreError> {
        let ech = LinMap::from_rows(ambient, gens)?.rref();
        let rows: Vec<Vec<Scalar>> =
            (0..ech.rank).map(|r| ech.matrix.row(r).to_vec()).collect();
        Ok(Subspace { ambient, basis: LinMap::from_rows(ambient, &rows)? })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: LinMap::zero(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: LinMap::identity(ambient) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    /// The pivot column of each canonical basis row, in row order (strictly
    /// increasing, since the basis is in reduced row-echelon form).
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.basis.rows())
            .map(|r| {
                (0..self.ambient)
                    .find(|&c| !self.basis.get(r, c).is_zero())
                    .expect("canonical basis has no zero rows")
            })
            .collect()
    }

    /// Reduces `v` modulo the subspace: subtracts the unique combination of
    /// basis rows matching `v` on the pivot columns. The result is zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, CoreError> {
        if v.len() != self.ambient {
            return Err(CoreError::DimMismatch {
                what: "vector length vs ambient",
                expected: self.ambient,
                got: v.len(),
            });
        }
        let mut out = v.to_vec();
        for r in 0..self.basis.rows() {
            let pivot = (0..self.ambient)
                .find(|&c| !self.basis.get(r, c).is_zero())
                .expect("canonical basis has no zero rows");
            if out[pivot].is_zero() {
                continue;
            }
            let k = out[pivot].clone();
            for c in 0..self.ambient {
                let b = self.basis.get(r, c);
                if !b.is_zero() {
                    out[c] -= &k * b;
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, CoreError> {
        Ok(is_zero_vec(&self.reduce(v)?))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, CoreError> {
        if other.ambient != self.ambient {
            return Err(CoreError::AmbientMismatch(self.ambient, other.ambient));
        }
        for row in other.basis_rows() {
            if !self.contains(&row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, CoreError> {
        if other.ambient != self.ambient {
            return Err(CoreError::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut gens = self.basis_rows();
        gens.extend(other.basis_rows());
        Subspace::from_rows(self.ambient, &gens)
    }

    /// Intersection via the kernel trick: a combination `a·U = b·W` of the two
    /// bases corresponds to a kernel vector of the stacked transpose
    /// `[Uᵀ | -Wᵀ]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, CoreError> {
        if other.ambient != self.ambient {
            return Err(CoreError::AmbientMismatch(self.ambient, other.ambient));
        }
        let du = self.dim();
        let dw = other.dim();
        let stacked = LinMap::from_fn(self.ambient, du + dw, |r, c| {
            if c < du {
                self.basis.get(c, r).clone()
            } else {
                -other.basis.get(c - du, r).clone()
            }
        });
        let ker = stacked.kernel_basis();
        let mut gens = Vec::with_capacity(ker.dim());
        for coeffs in ker.basis_rows() {
            let mut v = zeros(self.ambient);
            for (i, a) in coeffs[..du].iter().enumerate() {
                if !a.is_zero() {
                    for c in 0..self.ambient {
                        let b = self.basis.get(i, c);
                        if !b.is_zero() {
                            v[c] += a * b;
                        }
                    }
                }
            }
            gens.push(v);
        }
        Subspace::from_rows(self.ambient, &gens)
    }

    /// `dim(other / self)`, requiring `self ⊆ other`.
    pub fn quotient_dim_in(&self, other: &Subspace) -> Result<usize, CoreError> {
        if !other.contains_subspace(self)? {
            return Err(CoreError::NotContained);
        }
        Ok(other.dim() - self.dim())
    }
}
