//! Dense complex linear algebra: matrices, tensor structure, partial traces,
//! Hermitian eigendecomposition and seeded random states.

mod eigen;
mod matrix;
pub mod random;
mod shape;
mod state;

pub use eigen::{eig_hermitian, eigvals_hermitian, sqrt_psd, HermitianEigen};
pub use matrix::{inner, kron, vector_norm, ComplexMatrix};
pub use random::{haar_random_pure, haar_random_unitary, random_mixture, stream_rng, StreamRng};
pub use shape::{ShapeParseError, SystemShape};
pub use state::{partial_trace_matrix, DensityMatrix, PureState};

/// `ρ_keep` for a validated state; thin wrapper over
/// [`DensityMatrix::partial_trace`].
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> crate::Result<DensityMatrix> {
    rho.partial_trace(keep)
}
