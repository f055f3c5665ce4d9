//! Exact two-qubit concurrence and the tighter two-qubit upper bound.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;

use crate::linalg::{eig_hermitian, ComplexMatrix, DensityMatrix};
use crate::{tol, Error, Result};

fn require_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.shape().is_two_qubit() {
        Ok(())
    } else {
        Err(Error::NotTwoQubits {
            dims: rho.shape().dims().to_vec(),
        })
    }
}

/// `σ_y ⊗ σ_y`.
pub fn sigma_y_sigma_y() -> ComplexMatrix {
    let z = Complex64::new(0.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let sy = ComplexMatrix::from_vec(2, 2, vec![z, -i, i, z]).expect("2x2");
    sy.kron(&sy)
}

/// Spin-flipped state `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`.
pub fn tilde_two_qubit(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    require_two_qubits(rho)?;
    let yy = sigma_y_sigma_y();
    Ok(&(&yy * &rho.matrix().conj()) * &yy)
}

/// Square roots of the eigenvalues of `ρρ̃`, in decreasing order.
///
/// Computed from the Hermitian matrix `√ρ ρ̃ √ρ`, which is similar to `ρρ̃`.
/// With `ρ = U diag(p) U†` this is evaluated as `diag(√p) U†ρ̃U diag(√p)`
/// restricted to the support of `ρ`, so rank-deficient states give exact
/// zeros instead of `√ε`-sized noise.
pub fn wootters_lambdas(rho: &DensityMatrix) -> Result<[f64; 4]> {
    let tilde = tilde_two_qubit(rho)?;
    let eig = eig_hermitian(rho.matrix())?;
    let scale = eig.max().abs().max(1.0);
    if eig.min() < tol::PSD_FLOOR * scale {
        return Err(Error::NotPositive {
            min_eigenvalue: eig.min(),
        });
    }
    let support: Vec<usize> = (0..4)
        .filter(|&k| eig.values[k] > tol::RANK_CUTOFF * eig.max())
        .collect();
    let r = support.len();
    let roots: Vec<f64> = support.iter().map(|&k| eig.values[k].sqrt()).collect();
    let u = &eig.vectors;
    let rotated = &(&u.adjoint() * &tilde) * u;
    let reduced = ComplexMatrix::from_fn(r, r, |i, j| {
        rotated[(support[i], support[j])] * roots[i] * roots[j]
    });

    let mut lambdas = [0.0; 4];
    if r > 0 {
        let inner = eig_hermitian(&reduced.hermitian_part())?;
        let inner_scale = inner.max().abs().max(1.0);
        if inner.min() < tol::PSD_FLOOR * inner_scale {
            return Err(Error::NotPositive {
                min_eigenvalue: inner.min(),
            });
        }
        for (slot, &mu) in lambdas.iter_mut().zip(&inner.values) {
            *slot = mu.max(0.0).sqrt();
        }
    }
    lambdas.sort_by(|a, b| b.total_cmp(a));
    Ok(lambdas)
}

/// `C = max{λ₁ − λ₂ − λ₃ − λ₄, 0}`.
pub fn wootters_concurrence(rho: &DensityMatrix) -> Result<f64> {
    let l = wootters_lambdas(rho)?;
    Ok((l[0] - l[1] - l[2] - l[3]).max(0.0))
}

/// `Tr(ρρ̃)`, equal to `Tr(ρ⊗ρ · 4P₋⊗P₋)` for two qubits.
pub fn tighter_upper_two_qubit(rho: &DensityMatrix) -> Result<f64> {
    let tilde = tilde_two_qubit(rho)?;
    Ok(rho.matrix().trace_product(&tilde).re)
}

/// Two-qubit extras carried in a bounds report.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TwoQubitReport {
    pub wootters_c: f64,
    pub wootters_c_sq: f64,
    /// `Tr(ρρ̃)`.
    pub tighter_upper: f64,
}

pub fn two_qubit_report(rho: &DensityMatrix) -> Result<TwoQubitReport> {
    let c = wootters_concurrence(rho)?;
    Ok(TwoQubitReport {
        wootters_c: c,
        wootters_c_sq: c * c,
        tighter_upper: tighter_upper_two_qubit(rho)?,
    })
}
