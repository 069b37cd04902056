//! Exact dense linear algebra over the rationals.
//!
//! Ranks, kernel dimensions and hom-space dimensions computed here are ranks of
//! rational matrices, so they agree with the corresponding complex dimensions.

mod eigen;
mod elim;
mod matrix;
mod rational;
mod subspace;

pub use eigen::{
    minimal_polynomial, poly_at_matrix, rational_eigensplit, rational_roots, Eigenspace,
};
pub use elim::{kernel_basis, pivot_columns, rref, solve, SparseSystem};
pub use matrix::RatMatrix;
pub use rational::{frac, int, parse_rational, Rational};
pub use subspace::{coordinates_in, unit, Subspace};
