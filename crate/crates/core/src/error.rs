//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("polynomial is not symmetric under variable transpositions")]
    NotSymmetric,

    #[error("polynomial is not homogeneous of degree {expected}")]
    NotHomogeneous { expected: usize },

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("symmetric spec has weighted degree different from {expected}")]
    WeightedDegreeMismatch { expected: usize },

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("point is not a fixed point")]
    NotFixedPoint,

    #[error("point is regular (neither fixed nor indeterminate); no residue is attached")]
    RegularPoint,

    #[error("the local system does not vanish at the requested center")]
    NonzeroAtCenter,

    #[error(
        "local quotient dimension did not stabilize below cap {cap}: \
         non-isolated zero or positive-dimensional component (out of scope)"
    )]
    NonIsolated { cap: usize },

    #[error("no jet solution at order {order}")]
    NoJetSolution { order: usize },

    #[error("fixed point {0} is not simple (1 is an eigenvalue of the differential)")]
    NonSimpleFixedPoint(String),

    #[error("indeterminacy point present: {0}")]
    IndeterminacyPresent(String),

    #[error("this residue requires map order nu > 1 (degree >= 3)")]
    NuTooSmall,

    #[error("duplicate point: {0}")]
    DuplicatePoint(String),

    #[error("non-rational fixed points for nu = {nu}; complete rational lists exist only for nu in {{1, 2}}")]
    NonRationalFixedPoints { nu: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
