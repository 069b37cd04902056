//! Independent oracles: plain Gauss-Jordan over `BigRational` on dense matrices built
//! straight from structure constants. Nothing here calls the library's solvers.

#![allow(dead_code)]

use leibniz::algebra::LeibnizAlgebra;
use leibniz::exactla::RatMatrix;
use leibniz::repr::ModuleRep;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank by incremental reduction against a fully reduced pivot basis.
pub fn rank(rows: impl IntoIterator<Item = Vec<BigRational>>) -> usize {
    let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
    for mut row in rows {
        for (p, b) in &basis {
            if !row[*p].is_zero() {
                let f = row[*p].clone();
                for (x, y) in row.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(p) = row.iter().position(|x| !x.is_zero()) {
            let inv = BigRational::one() / &row[p];
            for x in row.iter_mut() {
                *x *= &inv;
            }
            for (_, b) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for (x, y) in b.iter_mut().zip(&row) {
                        *x -= &f * y;
                    }
                }
            }
            basis.push((p, row));
        }
    }
    basis.len()
}

fn sc(l: &LeibnizAlgebra, i: usize, j: usize, k: usize) -> BigRational {
    l.structure_constant(i, j, k).clone()
}

/// `dim Der(L)` as `n² − rank` of the product-rule system, written out entry by entry.
pub fn der_dim(l: &LeibnizAlgebra) -> usize {
    let n = l.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // Σ_m c_ij^m D[k][m] − Σ_p D[p][i] c_pj^k − Σ_p D[p][j] c_ip^k
                let mut row = vec![BigRational::zero(); n * n];
                for m in 0..n {
                    row[k * n + m] += sc(l, i, j, m);
                }
                for p in 0..n {
                    row[p * n + i] -= sc(l, p, j, k);
                    row[p * n + j] -= sc(l, i, p, k);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    n * n - rank(rows)
}

/// `dim hom(M, N)` from the intertwining equations `F ρ_M(x) = ρ_N(x) F`.
pub fn hom_dim(m: &ModuleRep, n: &ModuleRep) -> usize {
    let (s, t) = (m.mdim(), n.mdim());
    let mut rows = Vec::new();
    for (a, b) in m.action().iter().zip(n.action()) {
        for r in 0..t {
            for c in 0..s {
                let mut row = vec![BigRational::zero(); t * s];
                for k in 0..s {
                    row[r * s + k] += a[(k, c)].clone();
                }
                for k in 0..t {
                    row[k * s + c] -= b[(r, k)].clone();
                }
                rows.push(row);
            }
        }
    }
    t * s - rank(rows)
}

pub fn matrix_rank(m: &RatMatrix) -> usize {
    rank(m.row_vecs())
}

/// Brute-force Leibniz identity on all triples, computed from the constants directly.
pub fn is_leibniz(l: &LeibnizAlgebra) -> bool {
    let n = l.dim();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for t in 0..n {
                    let mut lhs = BigRational::zero();
                    let mut rhs = BigRational::zero();
                    for p in 0..n {
                        lhs += sc(l, y, z, p) * sc(l, x, p, t);
                        rhs += sc(l, x, y, p) * sc(l, p, z, t) - sc(l, x, z, p) * sc(l, p, y, t);
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Deterministic unimodular integer matrix: a product of elementary row operations
/// and a permutation drawn from `rng`.
pub fn unimodular(n: usize, rng: &mut impl rand::Rng) -> RatMatrix {
    let mut m = RatMatrix::identity(n);
    for _ in 0..3 * n {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a == b {
            continue;
        }
        let c = BigRational::from_integer(rng.gen_range(-2i64..=2).into());
        let mut e = RatMatrix::identity(n);
        e[(a, b)] = c;
        m = e.try_mul(&m).unwrap();
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut p = RatMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p[(j, i)] = BigRational::one();
    }
    p.try_mul(&m).unwrap()
}
