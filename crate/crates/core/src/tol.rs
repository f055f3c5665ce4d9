//! Numerical tolerances shared by every module.
//!
//! Dimensions stay below ~100, so fixed absolute thresholds are adequate.

/// Maximum entrywise deviation from Hermiticity, and from unit trace.
pub const HERMITIAN: f64 = 1e-10;
/// Unit trace.
pub const TRACE: f64 = 1e-10;
/// Most negative eigenvalue still treated as zero (clamped) in PSD checks.
pub const PSD_FLOOR: f64 = -1e-10;
/// Relative eigen-residual bound `‖Av − λv‖ ≤ EIGEN_RESIDUAL·‖A‖`.
pub const EIGEN_RESIDUAL: f64 = 1e-9;
/// Norm deviation accepted for pure-state vectors.
pub const NORMALIZATION: f64 = 1e-12;
/// Agreement required between the purity form and the literal `Tr(ρ⊗ρ·O)`.
pub const CROSS_CHECK: f64 = 1e-9;
/// Slack applied to every inequality verdict.
pub const INEQUALITY_SLACK: f64 = 1e-9;
/// Tolerance used when loading externally produced state files.
pub const EXTERNAL_STATE: f64 = 1e-8;
/// Eigenvalues of `ρ` below this fraction of the largest are treated as
/// exact zeros when forming Wootters' `λᵢ`.
pub const RANK_CUTOFF: f64 = 1e-13;
