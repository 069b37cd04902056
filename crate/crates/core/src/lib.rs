//! Exact computations with finite-dimensional Leibniz algebras given by rational
//! structure constants: squares ideal and liezation, Levi lifting, decomposition
//! into indecomposable semisimple summands, derivation algebras, and the block
//! structure of automorphisms.
//!
//! Everything is computed over `Q` with exact arithmetic. All bases returned by the
//! library are canonical (reduced row echelon), so outputs are deterministic.

pub mod algebra;
pub mod autos;
pub mod catalog;
pub mod cli;
pub mod deriv;
mod error;
pub mod exactla;
pub mod repr;
pub mod structure;

pub use error::{Error, Result};
