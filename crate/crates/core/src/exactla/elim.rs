//! Elimination kernels.
//!
//! Dense reduction clears denominators row by row and runs Bareiss fraction-free
//! forward elimination over the integers, followed by a normalized rational
//! back-substitution to reach the reduced row echelon form.
//!
//! Large sparse homogeneous systems (derivation and intertwiner equations, up to
//! several thousand rows) go through [`SparseSystem`], which reduces each incoming
//! equation against the pivots seen so far using integer row combinations with
//! content removal. Equations that reduce to zero are discarded on arrival.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::RatMatrix;
use super::rational::{integer_row, make_primitive, Rational};
use super::subspace::Subspace;
use crate::{Error, Result};

/// Reduced row echelon form and rank.
pub fn rref(m: &RatMatrix) -> (RatMatrix, usize) {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|i| integer_row(m.row(i))).collect();

    // Bareiss forward pass. Entries below the current pivot row stay integral
    // because every division by `prev` is exact.
    let mut pivots: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let v = &prow[c] * &row[j] - &f * &prow[j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    let rank = r;

    // Normalized back-substitution over the rationals.
    let mut out: Vec<Vec<Rational>> = a
        .into_iter()
        .take(rank)
        .map(|row| {
            let mut row = row;
            make_primitive(&mut row);
            row.into_iter().map(Rational::from_integer).collect()
        })
        .collect();
    for k in (0..rank).rev() {
        let c = pivots[k];
        let lead = out[k][c].clone();
        if !lead.is_one() {
            for x in out[k][c..].iter_mut() {
                *x /= &lead;
            }
        }
        let (above, rest) = out.split_at_mut(k);
        let prow = &rest[0];
        for row in above.iter_mut() {
            let f = row[c].clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                if !prow[j].is_zero() {
                    let d = &f * &prow[j];
                    row[j] -= d;
                }
            }
        }
    }
    let mut result = RatMatrix::zeros(rows, cols);
    for (i, row) in out.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            result[(i, j)] = x;
        }
    }
    (result, rank)
}

/// Pivot columns of a matrix already in RREF (one per nonzero row).
pub fn pivot_columns(r: &RatMatrix) -> Vec<usize> {
    (0..r.rows())
        .filter_map(|i| r.row(i).iter().position(|x| !x.is_zero()))
        .collect()
}

/// Canonical basis of `{v : m v = 0}`.
pub fn kernel_basis(m: &RatMatrix) -> Subspace {
    let cols = m.cols();
    let (r, rank) = rref(m);
    let pivots = pivot_columns(&r);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (k, &p) in pivots.iter().enumerate().take(rank) {
            v[p] = -r[(k, f)].clone();
        }
        basis.push(v);
    }
    Subspace::from_spanning(cols, &basis)
}

/// One particular solution of `m v = b` with all free coordinates zero.
pub fn solve(m: &RatMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let cols = m.cols();
    let mut aug = RatMatrix::zeros(m.rows(), cols + 1);
    for i in 0..m.rows() {
        for j in 0..cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, cols)] = b[i].clone();
    }
    let (r, rank) = rref(&aug);
    let pivots = pivot_columns(&r);
    if pivots.contains(&cols) {
        return Err(Error::NoSolution);
    }
    let mut v = vec![Rational::zero(); cols];
    for (k, &p) in pivots.iter().enumerate().take(rank) {
        v[p] = r[(k, cols)].clone();
    }
    Ok(v)
}

type SparseRow = Vec<(usize, BigInt)>;

/// Incremental fraction-free elimination for large, sparse, homogeneous or affine systems.
///
/// Rows are stored as primitive integer vectors in echelon order (leading entry
/// positive). An optional right-hand side lives in column `unknowns`.
#[derive(Debug, Clone)]
pub struct SparseSystem {
    unknowns: usize,
    pivots: Vec<Option<SparseRow>>,
    inconsistent: bool,
}

impl SparseSystem {
    pub fn new(unknowns: usize) -> Self {
        SparseSystem {
            unknowns,
            pivots: vec![None; unknowns + 1],
            inconsistent: false,
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rank(&self) -> usize {
        self.pivots[..self.unknowns]
            .iter()
            .filter(|p| p.is_some())
            .count()
    }

    /// Adds the homogeneous equation `Σ coeff·x_col = 0`. Repeated columns are summed.
    pub fn add_equation(&mut self, terms: &[(usize, Rational)]) {
        self.add_affine(terms, &Rational::zero());
    }

    /// Adds `Σ coeff·x_col = rhs`.
    pub fn add_affine(&mut self, terms: &[(usize, Rational)], rhs: &Rational) {
        let mut merged: Vec<(usize, Rational)> = terms
            .iter()
            .filter(|(_, q)| !q.is_zero())
            .cloned()
            .collect();
        if !rhs.is_zero() {
            merged.push((self.unknowns, rhs.clone()));
        }
        if merged.is_empty() {
            return;
        }
        merged.sort_by_key(|(c, _)| *c);
        let mut dedup: Vec<(usize, Rational)> = Vec::with_capacity(merged.len());
        for (c, q) in merged {
            assert!(c <= self.unknowns, "column {c} out of range");
            match dedup.last_mut() {
                Some((lc, lq)) if *lc == c => *lq += q,
                _ => dedup.push((c, q)),
            }
        }
        dedup.retain(|(_, q)| !q.is_zero());
        if dedup.is_empty() {
            return;
        }
        let l = super::rational::denominator_lcm(dedup.iter().map(|(_, q)| q));
        let mut row: SparseRow = dedup
            .into_iter()
            .map(|(c, q)| (c, q.numer() * (&l / q.denom())))
            .collect();
        primitive_sparse(&mut row);
        self.insert(row);
    }

    fn insert(&mut self, mut row: SparseRow) {
        loop {
            let Some((c, a)) = row.first().cloned() else {
                return;
            };
            if c == self.unknowns {
                self.inconsistent = true;
                return;
            }
            match &self.pivots[c] {
                Some(p) => {
                    let b = &p[0].1;
                    let g = a.gcd(b);
                    let fa = b / &g;
                    let fb = &a / &g;
                    row = combine(&row, &fa, p, &fb);
                    primitive_sparse(&mut row);
                }
                None => {
                    if row[0].1.is_negative() {
                        for (_, x) in row.iter_mut() {
                            *x = -std::mem::take(x);
                        }
                    }
                    self.pivots[c] = Some(row);
                    return;
                }
            }
        }
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    /// Fully reduced pivot rows as rationals with leading 1, in pivot order.
    fn reduced_rows(&self) -> Vec<(usize, Vec<(usize, Rational)>)> {
        let mut reduced: Vec<(usize, Vec<(usize, Rational)>)> = Vec::new();
        // Back-substitute from the last pivot upward; `done` holds already-reduced rows.
        let mut done: Vec<Option<Vec<(usize, Rational)>>> = vec![None; self.unknowns + 1];
        for c in (0..self.unknowns).rev() {
            let Some(p) = &self.pivots[c] else { continue };
            let lead = Rational::from_integer(p[0].1.clone());
            let mut dense: std::collections::BTreeMap<usize, Rational> = p
                .iter()
                .map(|(j, x)| (*j, Rational::from_integer(x.clone()) / &lead))
                .collect();
            let cols: Vec<usize> = dense.keys().copied().filter(|&j| j > c).collect();
            for j in cols {
                if let Some(q) = &done[j] {
                    let f = dense.get(&j).cloned().unwrap_or_else(Rational::zero);
                    if f.is_zero() {
                        continue;
                    }
                    for (k, y) in q {
                        let e = dense.entry(*k).or_insert_with(Rational::zero);
                        *e -= &f * y;
                    }
                }
            }
            let row: Vec<(usize, Rational)> =
                dense.into_iter().filter(|(_, x)| !x.is_zero()).collect();
            done[c] = Some(row.clone());
            reduced.push((c, row));
        }
        reduced.reverse();
        reduced
    }

    /// Canonical basis of the solution space of the homogeneous part.
    pub fn kernel(&self) -> Subspace {
        let n = self.unknowns;
        let reduced = self.reduced_rows();
        let mut is_pivot = vec![false; n];
        for (c, _) in &reduced {
            is_pivot[*c] = true;
        }
        let mut basis = Vec::new();
        for f in (0..n).filter(|&j| !is_pivot[j]) {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (c, row) in &reduced {
                if let Some((_, x)) = row.iter().find(|(j, _)| *j == f) {
                    v[*c] = -x.clone();
                }
            }
            basis.push(v);
        }
        Subspace::from_spanning(n, &basis)
    }

    /// Particular solution with free coordinates zero.
    pub fn particular_solution(&self) -> Result<Vec<Rational>> {
        if self.inconsistent {
            return Err(Error::NoSolution);
        }
        let n = self.unknowns;
        let mut v = vec![Rational::zero(); n];
        for (c, row) in self.reduced_rows() {
            if let Some((_, x)) = row.iter().find(|(j, _)| *j == n) {
                v[c] = x.clone();
            }
        }
        Ok(v)
    }
}

fn primitive_sparse(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// `fa * a - fb * b`, dropping zeros.
fn combine(a: &SparseRow, fa: &BigInt, b: &SparseRow, fb: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, fa * &a[i].1));
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(fb * &b[j].1)));
            j += 1;
        } else {
            let v = fa * &a[i].1 - fb * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
