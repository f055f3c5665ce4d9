use alloc::vec::Vec;

use crate::projectors::Label;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid system shape {dims:?}: every local dimension must be at least 2 and there must be at least one subsystem")]
    InvalidShape { dims: Vec<usize> },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("entry buffer has {found} elements, expected {expected}")]
    BadLength { expected: usize, found: usize },

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("subsystem index {index} out of range for {subsystems} subsystems")]
    SubsystemOutOfRange { index: usize, subsystems: usize },

    #[error("subsystem selection must be nonempty")]
    EmptySelection,

    #[error("subsystem index {index} listed twice")]
    DuplicateSubsystem { index: usize },

    #[error("matrix is not Hermitian (max |A - A†| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("trace is {trace}, expected 1")]
    TraceNotOne { trace: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("state vector has norm {norm}, expected 1")]
    NotNormalized { norm: f64 },

    #[error("operation needs {expected} subsystems, shape has {found}")]
    WrongSubsystemCount {
        expected: &'static str,
        found: usize,
    },

    #[error("operation needs a two-qubit (2x2) shape, found {dims:?}")]
    NotTwoQubits { dims: Vec<usize> },

    #[error("purity {purity} unreachable in dimension {dim} (must exceed {min} and be at most 1)")]
    PurityOutOfRange { purity: f64, dim: usize, min: f64 },

    #[error("parameter {name} = {value} outside its allowed range")]
    ParameterOutOfRange { name: &'static str, value: f64 },

    #[error("{label}: purity form {purity_form} disagrees with literal expectation {literal}")]
    CrossCheck {
        label: Label,
        purity_form: f64,
        literal: f64,
    },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}
