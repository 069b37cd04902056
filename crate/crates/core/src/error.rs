use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("not split over Q: {0}")]
    NotSplitOverQ(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("ideal check failed: {0}")]
    IdealViolation(String),
    #[error("algebra is not a Lie algebra")]
    NotLie,
    #[error("liezation is not semisimple")]
    NotSemisimple,
    #[error("subspace is not invariant: {0}")]
    NotInvariant(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("incompatible automorphism component: {0}")]
    ComponentIncompatible(String),
    #[error("derivation split does not add up: {0}")]
    SplitMismatch(String),
    #[error("axiom violated: {0}")]
    Axiom(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
