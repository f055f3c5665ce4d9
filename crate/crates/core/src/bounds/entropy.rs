//! Linear entropy, the universal state inverter and the inequalities that
//! follow from the two-copy bounds.

use crate::linalg::{eigvals_hermitian, sqrt_psd, ComplexMatrix, DensityMatrix};
use crate::{tol, Error, Result};

/// `E(ρ) = 1 − Tr ρ²`.
pub fn linear_entropy(rho: &DensityMatrix) -> f64 {
    1.0 - rho.purity()
}

fn require_bipartite(rho: &DensityMatrix) -> Result<()> {
    match rho.shape().len() {
        2 => Ok(()),
        found => Err(Error::WrongSubsystemCount {
            expected: "exactly 2",
            found,
        }),
    }
}

/// `ρ̃ = Tr(ρ)𝟙⊗𝟙 − ρ_A⊗𝟙 − 𝟙⊗ρ_B + ρ`.
pub fn universal_inverter(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    require_bipartite(rho)?;
    let (da, db) = (rho.shape().dims()[0], rho.shape().dims()[1]);
    let rho_a = rho.partial_trace(&[0])?;
    let rho_b = rho.partial_trace(&[1])?;
    let id_a = ComplexMatrix::identity(da);
    let id_b = ComplexMatrix::identity(db);
    let trace = rho.matrix().trace();
    let scaled_identity = ComplexMatrix::identity(da * db).map(|z| z * trace);
    let out = &(&scaled_identity - &rho_a.matrix().kron(&id_b)) - &id_a.kron(rho_b.matrix());
    Ok(&out + rho.matrix())
}

/// Inequality verdicts for one bipartite state.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EntropyReport {
    /// `E(ρ_AB)`.
    pub linear_entropy: f64,
    pub linear_entropy_a: f64,
    pub linear_entropy_b: f64,
    /// `E(ρ_AB) ≥ E(ρ_B) − E(ρ_A)` and `E(ρ_AB) ≥ E(ρ_A) − E(ρ_B)`.
    pub triangle: [bool; 2],
    /// `E(ρ_A) + E(ρ_B) ≥ E(ρ_AB)`.
    pub subadditivity: bool,
    /// `Tr(√ρ ρ̃ √ρ) = 1 + Tr ρ² − Tr ρ_A² − Tr ρ_B²`.
    pub inverter_trace: f64,
    pub inverter_trace_nonnegative: bool,
    /// Smallest eigenvalue of `ρ̃`.
    pub inverter_min_eigenvalue: f64,
}

impl EntropyReport {
    pub fn all_hold(&self) -> bool {
        self.triangle[0]
            && self.triangle[1]
            && self.subadditivity
            && self.inverter_trace_nonnegative
    }
}

/// Evaluates the triangle inequalities, subadditivity and the inverter
/// positivity for a bipartite state, each with slack `1e-9`.
pub fn entropy_checks(rho: &DensityMatrix) -> Result<EntropyReport> {
    require_bipartite(rho)?;
    let slack = tol::INEQUALITY_SLACK;
    let e_ab = linear_entropy(rho);
    let e_a = linear_entropy(&rho.partial_trace(&[0])?);
    let e_b = linear_entropy(&rho.partial_trace(&[1])?);

    let inverter = universal_inverter(rho)?;
    let sqrt_rho = sqrt_psd(rho.matrix())?;
    let sandwiched = &(&sqrt_rho * &inverter) * &sqrt_rho;
    let inverter_trace = sandwiched.trace().re;
    let inverter_min_eigenvalue = eigvals_hermitian(&inverter)?[0];

    Ok(EntropyReport {
        linear_entropy: e_ab,
        linear_entropy_a: e_a,
        linear_entropy_b: e_b,
        triangle: [e_ab >= e_b - e_a - slack, e_ab >= e_a - e_b - slack],
        subadditivity: e_a + e_b >= e_ab - slack,
        inverter_trace,
        inverter_trace_nonnegative: inverter_trace >= -slack,
        inverter_min_eigenvalue,
    })
}
