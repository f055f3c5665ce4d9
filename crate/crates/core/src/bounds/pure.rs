#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;

use crate::linalg::PureState;
use crate::{Error, Result};

/// `C(ψ) = √(2(1 − Tr ρ_A²))` for a bipartite pure state.
pub fn pure_concurrence_bipartite(psi: &PureState) -> Result<f64> {
    let n = psi.shape().len();
    if n != 2 {
        return Err(Error::WrongSubsystemCount {
            expected: "exactly 2",
            found: n,
        });
    }
    let purity_a = psi.reduced(&[0])?.purity();
    Ok((2.0 * (1.0 - purity_a)).max(0.0).sqrt())
}

/// `C_N(Ψ) = 2^{1−N/2} √((2^N − 2) − Σᵢ Tr ρᵢ²)`, the sum running over all
/// `2^N − 2` proper nonempty subsystem subsets.
pub fn pure_concurrence_multipartite(psi: &PureState) -> Result<f64> {
    let n = psi.shape().len();
    if n < 2 {
        return Err(Error::WrongSubsystemCount {
            expected: "at least 2",
            found: n,
        });
    }
    let rho = psi.density();
    let mut sum = 0.0;
    for subset in psi.shape().proper_subsets() {
        sum += rho.reduced_purity(&subset)?;
    }
    let count = 2f64.powi(n as i32) - 2.0;
    Ok(2f64.powf(1.0 - n as f64 / 2.0) * (count - sum).max(0.0).sqrt())
}
