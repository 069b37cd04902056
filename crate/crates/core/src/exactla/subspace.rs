//! Subspaces of `Q^n` with canonical RREF bases.

use num_traits::{One, Zero};

use super::elim::{kernel_basis, pivot_columns, rref, solve};
use super::matrix::RatMatrix;
use super::rational::Rational;
use crate::{Error, Result};

/// A subspace stored by the nonzero rows of its reduced row echelon basis.
///
/// Two subspaces compare equal exactly when they are the same subspace.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: RatMatrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RatMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RatMatrix::identity(ambient),
        }
    }

    /// Span of the given vectors (any number, possibly dependent).
    pub fn from_spanning(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        let m = RatMatrix::from_rows(ambient, vectors);
        Self::row_space(&m)
    }

    pub fn row_space(m: &RatMatrix) -> Self {
        let (r, rank) = rref(m);
        let keep: Vec<usize> = (0..rank).collect();
        let cols: Vec<usize> = (0..m.cols()).collect();
        Subspace {
            ambient: m.cols(),
            basis: r.select(&keep, &cols),
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vectors: Vec<Vec<Rational>> = indices.iter().map(|&i| unit(ambient, i)).collect();
        Self::from_spanning(ambient, &vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> Vec<usize> {
        pivot_columns(&self.basis)
    }

    /// Lowest pivot column; used to order lists of subspaces deterministically.
    pub fn leading_pivot(&self) -> Option<usize> {
        self.pivots().first().copied()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient != n {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: n,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Ok(Self::from_spanning(self.ambient, &vs))
    }

    /// Intersection, computed from the kernel of `[A^T | -B^T]`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Ok(Self::zero(self.ambient));
        }
        let mut m = RatMatrix::zeros(self.ambient, da + db);
        for k in 0..self.ambient {
            for i in 0..da {
                m[(k, i)] = self.basis[(i, k)].clone();
            }
            for j in 0..db {
                m[(k, da + j)] = -other.basis[(j, k)].clone();
            }
        }
        let ker = kernel_basis(&m);
        let vectors: Vec<Vec<Rational>> = ker
            .basis_vectors()
            .iter()
            .map(|coef| self.combine(&coef[..da]))
            .collect();
        Ok(Self::from_spanning(self.ambient, &vectors))
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool> {
        self.check_ambient(v.len())?;
        Ok(self.coordinates(v).is_ok())
    }

    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        Ok(self.sum(other)?.dim() == self.dim())
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coef: &[Rational]) -> Vec<Rational> {
        assert_eq!(coef.len(), self.dim());
        let mut v = vec![Rational::zero(); self.ambient];
        for (i, c) in coef.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, x) in self.basis.row(i).iter().enumerate() {
                if !x.is_zero() {
                    v[k] += c * x;
                }
            }
        }
        v
    }

    /// Coordinates of `v` in the RREF basis; `NoSolution` when `v` is outside.
    ///
    /// Reads the pivot entries directly and then checks the reconstruction.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_ambient(v.len())?;
        let coef: Vec<Rational> = self.pivots().iter().map(|&p| v[p].clone()).collect();
        if self.combine(&coef) != v {
            return Err(Error::NoSolution);
        }
        Ok(coef)
    }

    /// Greedy completion by standard basis vectors `e_0, e_1, ...` in order.
    /// Returns the chosen indices; together with this subspace they span everything.
    pub fn standard_complement(&self) -> Vec<usize> {
        let mut current = self.clone();
        let mut chosen = Vec::new();
        for k in 0..self.ambient {
            if current.dim() == self.ambient {
                break;
            }
            let e = unit(self.ambient, k);
            if !current.contains_vector(&e).unwrap_or(false) {
                current = current
                    .sum(&Self::from_spanning(self.ambient, &[e]))
                    .unwrap();
                chosen.push(k);
            }
        }
        chosen
    }

    /// Image of the subspace under a linear map given as a matrix acting on columns.
    pub fn image(&self, m: &RatMatrix) -> Result<Self> {
        self.check_ambient(m.cols())?;
        let vs: Result<Vec<_>> = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Ok(Self::from_spanning(m.rows(), &vs?))
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// Coordinates of `v` in an arbitrary (independent) list of column vectors.
pub fn coordinates_in(columns: &RatMatrix, v: &[Rational]) -> Result<Vec<Rational>> {
    solve(columns, v)
}
