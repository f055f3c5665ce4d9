//! Observable bounds on squared concurrence for finite-dimensional mixed states.
//!
//! Every quantity here is an expectation value on the two-fold copy `ρ⊗ρ`:
//! upper bounds `K₁`, `K₂`, `K`, lower bounds `V₁`, `V₂`, `V`, and the
//! pure-state observable `A`. The crate computes each of them twice, once from
//! reduced purities and once as a literal trace against the dense two-copy
//! operator, and carries the linear-entropy inequalities and the exact
//! two-qubit (Wootters) concurrence alongside.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command-line
//! front end and parallel batch evaluation live in the companion `concurrence`
//! crate.
#![no_std]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod ensembles;
mod error;
pub mod linalg;
pub mod projectors;
pub mod states;
pub mod tol;

pub use bounds::{BoundsEvaluator, BoundsReport};
pub use ensembles::{EnsembleSpec, SampleRow};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, DensityMatrix, PureState, SystemShape};
pub use projectors::{Label, TwoCopyObservable};

pub use num_complex::Complex64 as C64;
