use thiserror::Error;

use crate::algebra::scalar::MpComplex;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("scalar domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("mixed carrier kinds in one Wronskian: {0}")]
    MixedCarriers(String),
    #[error("non-polynomial result: {0}")]
    NonPolynomial(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("Wronskian of {0} functions exceeds the supported size")]
    TooManyFunctions(usize),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("n = {n} is not in the index set of {family}")]
    NotInIndexSet { family: String, n: u64 },
    #[error("degree mismatch: expected {expected}, got {actual:?}")]
    DegreeMismatch { expected: usize, actual: Option<usize> },
    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),
    #[error("unsupported for this family: {0}")]
    Unsupported(String),
    #[error("pole at the evaluation point: {0}")]
    Pole(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Error)]
pub enum RootError {
    #[error("cannot find roots of a polynomial of degree < 1")]
    Degenerate,
    #[error("root iteration did not converge within {iterations} sweeps at {precision_bits} bits")]
    NonConvergence {
        iterations: usize,
        precision_bits: u32,
        partial: Vec<MpComplex>,
    },
    #[error("limit matching needs equal list lengths, got {zeros} zeros and {limits} limit points")]
    LengthMismatch { zeros: usize, limits: usize },
}

#[derive(Debug, Clone, Error)]
pub enum VerifyError {
    #[error("point lies on the branch cut: {0}")]
    OnBranchCut(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("pole coincidence: {0}")]
    Pole(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Root(#[from] RootError),
}

impl From<AlgebraError> for VerifyError {
    fn from(e: AlgebraError) -> Self {
        VerifyError::Construction(ConstructionError::Algebra(e))
    }
}
