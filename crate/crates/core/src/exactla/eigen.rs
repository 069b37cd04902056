//! Rational eigenvalues via the minimal polynomial.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::elim::{kernel_basis, SparseSystem};
use super::matrix::RatMatrix;
use super::rational::{integer_row, make_primitive, positive_divisors, Rational};
use super::subspace::Subspace;
use crate::{Error, Result};

/// Monic minimal polynomial, coefficients from the constant term upward.
///
/// Found as the first linear dependency among `I, m, m^2, ...`.
pub fn minimal_polynomial(m: &RatMatrix) -> Result<Vec<Rational>> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let n = m.rows();
    let mut powers: Vec<RatMatrix> = vec![RatMatrix::identity(n)];
    for k in 1..=n.max(1) {
        let next = powers[k - 1].try_mul(m)?;
        // Solve Σ_{j<k} a_j m^j = m^k entrywise.
        let mut sys = SparseSystem::new(k);
        for e in 0..n * n {
            let terms: Vec<(usize, Rational)> = powers
                .iter()
                .enumerate()
                .map(|(j, p)| (j, p.entries()[e].clone()))
                .collect();
            sys.add_affine(&terms, &next.entries()[e]);
        }
        if let Ok(a) = sys.particular_solution() {
            let mut poly: Vec<Rational> = a.into_iter().map(|x| -x).collect();
            poly.push(Rational::one());
            return Ok(poly);
        }
        powers.push(next);
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// Distinct rational roots of a polynomial (coefficients constant-first), ascending.
pub fn rational_roots(poly: &[Rational]) -> Vec<Rational> {
    let mut coeffs = integer_row(poly);
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    if !make_primitive(&mut coeffs) {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let mut lead_zero = 0;
    while coeffs.get(lead_zero).is_some_and(Zero::is_zero) {
        lead_zero += 1;
    }
    if lead_zero > 0 {
        roots.push(Rational::zero());
        coeffs.drain(..lead_zero);
    }
    if coeffs.len() > 1 {
        let a0 = coeffs[0].clone();
        let an = coeffs[coeffs.len() - 1].clone();
        let ps = positive_divisors(&a0);
        let qs = positive_divisors(&an);
        let mut seen = std::collections::BTreeSet::new();
        for p in &ps {
            for q in &qs {
                for sign in [1i32, -1] {
                    let cand = Rational::new(p * BigInt::from(sign), q.clone());
                    if seen.insert(cand.clone()) && eval(&coeffs, &cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

fn eval(coeffs: &[BigInt], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
        acc * x + Rational::from_integer(c.clone())
    })
}

/// Eigenvalue with its eigenspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenspace {
    pub eigenvalue: Rational,
    pub space: Subspace,
}

/// Decomposes `Q^n` into eigenspaces of `m`, ascending by eigenvalue.
///
/// Fails with [`Error::NotSplitOverQ`] unless `m` is diagonalizable with all eigenvalues rational.
pub fn rational_eigensplit(m: &RatMatrix) -> Result<Vec<Eigenspace>> {
    let n = m.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let poly = minimal_polynomial(m)?;
    let roots = rational_roots(&poly);
    let mut out = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        let shifted = m.try_sub(&RatMatrix::scalar(n, lambda.clone()))?;
        let space = kernel_basis(&shifted);
        total += space.dim();
        out.push(Eigenspace {
            eigenvalue: lambda,
            space,
        });
    }
    if total != n {
        return Err(Error::NotSplitOverQ(format!(
            "eigenspaces cover {total} of {n} dimensions"
        )));
    }
    Ok(out)
}

/// Evaluates a polynomial (constant-first) at a square matrix.
pub fn poly_at_matrix(poly: &[Rational], m: &RatMatrix) -> Result<RatMatrix> {
    let n = m.rows();
    let mut acc = RatMatrix::zeros(n, n);
    for c in poly.iter().rev() {
        acc = acc.try_mul(m)?.try_add(&RatMatrix::scalar(n, c.clone()))?;
    }
    Ok(acc)
}
