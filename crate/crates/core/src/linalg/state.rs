use alloc::vec::Vec;

use num_complex::Complex64;

use super::{eigvals_hermitian, vector_norm, ComplexMatrix, SystemShape};
use crate::{tol, Error, Result};

/// A validated mixed state: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    shape: SystemShape,
    mat: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates `mat` against the default tolerances.
    pub fn new(shape: SystemShape, mat: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(shape, mat, tol::HERMITIAN)
    }

    /// Validates with a caller-chosen tolerance for Hermiticity, trace and the
    /// PSD floor. The stored matrix is the Hermitian part of `mat`.
    pub fn with_tolerance(shape: SystemShape, mat: ComplexMatrix, tolerance: f64) -> Result<Self> {
        let n = mat.ensure_square()?;
        if n != shape.total_dim() {
            return Err(Error::DimensionMismatch {
                expected: shape.total_dim(),
                found: n,
            });
        }
        let deviation = mat.hermiticity_deviation();
        if deviation > tolerance {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = mat.trace();
        if (trace.re - 1.0).abs() > tolerance || trace.im.abs() > tolerance {
            return Err(Error::TraceNotOne { trace: trace.re });
        }
        let mat = mat.hermitian_part();
        let min_eigenvalue = eigvals_hermitian(&mat)?[0];
        if min_eigenvalue < -tolerance {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(Self { shape, mat })
    }

    /// Skips validation; callers guarantee the invariants by construction.
    pub(crate) fn from_parts_unchecked(shape: SystemShape, mat: ComplexMatrix) -> Self {
        debug_assert_eq!(mat.rows(), shape.total_dim());
        Self { shape, mat }
    }

    /// `𝟙/D`.
    pub fn maximally_mixed(shape: SystemShape) -> Self {
        let d = shape.total_dim();
        let mat = ComplexMatrix::identity(d).scale(1.0 / d as f64);
        Self { shape, mat }
    }

    /// Convex combination `Σ wᵢ ρᵢ`; weights must be nonnegative and sum to 1.
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Result<Self> {
        let first = parts.first().ok_or(Error::EmptySelection)?.1;
        let total: f64 = parts.iter().map(|(w, _)| w).sum();
        if (total - 1.0).abs() > tol::TRACE {
            return Err(Error::ParameterOutOfRange {
                name: "mixture weight sum",
                value: total,
            });
        }
        let d = first.dim();
        let mut mat = ComplexMatrix::zeros(d, d);
        for &(w, rho) in parts {
            if rho.shape != first.shape {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: rho.dim(),
                });
            }
            if w < 0.0 {
                return Err(Error::ParameterOutOfRange {
                    name: "mixture weight",
                    value: w,
                });
            }
            mat = &mat + &rho.mat.scale(w);
        }
        Ok(Self {
            shape: first.shape.clone(),
            mat,
        })
    }

    pub fn shape(&self) -> &SystemShape {
        &self.shape
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        // Tr ρ² = Σ |ρ_ij|² for Hermitian ρ
        self.mat.as_slice().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Reduced state on the subsystems in `keep` (ordered ascending).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let keep = self.shape.selection(keep)?;
        if keep.len() == self.shape.len() {
            return Ok(self.clone());
        }
        let reduced_shape = self.shape.restrict(&keep)?;
        let mat = partial_trace_matrix(&self.mat, &self.shape, &keep);
        Ok(Self::from_parts_unchecked(reduced_shape, mat))
    }

    /// `Tr ρ_S²` for the reduction onto `subset`.
    pub fn reduced_purity(&self, subset: &[usize]) -> Result<f64> {
        Ok(self.partial_trace(subset)?.purity())
    }

    /// Eigenvalues, ascending.
    pub fn spectrum(&self) -> Result<Vec<f64>> {
        eigvals_hermitian(&self.mat)
    }
}

/// Traces out every subsystem not in `keep` (which must be sorted and valid).
pub fn partial_trace_matrix(
    mat: &ComplexMatrix,
    shape: &SystemShape,
    keep: &[usize],
) -> ComplexMatrix {
    let traced = shape.complement(keep);
    let d = shape.total_dim();
    let kept_dims: Vec<usize> = keep.iter().map(|&i| shape.dims()[i]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&i| shape.dims()[i]).collect();
    let kept_dim: usize = kept_dims.iter().product();

    let split: Vec<(usize, usize)> = (0..d)
        .map(|idx| {
            let digits = shape.digits(idx);
            let k = keep
                .iter()
                .zip(&kept_dims)
                .fold(0, |acc, (&i, &di)| acc * di + digits[i]);
            let t = traced
                .iter()
                .zip(&traced_dims)
                .fold(0, |acc, (&i, &di)| acc * di + digits[i]);
            (k, t)
        })
        .collect();

    let mut out = ComplexMatrix::zeros(kept_dim, kept_dim);
    for i in 0..d {
        let (ki, ti) = split[i];
        for j in 0..d {
            let (kj, tj) = split[j];
            if ti == tj {
                out[(ki, kj)] += mat[(i, j)];
            }
        }
    }
    out
}

/// A normalized state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    shape: SystemShape,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Requires `‖ψ‖ = 1` within `1e-12`.
    pub fn new(shape: SystemShape, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != shape.total_dim() {
            return Err(Error::DimensionMismatch {
                expected: shape.total_dim(),
                found: amplitudes.len(),
            });
        }
        let norm = vector_norm(&amplitudes);
        if (norm - 1.0).abs() > tol::NORMALIZATION {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { shape, amplitudes })
    }

    /// Normalizes an arbitrary nonzero vector.
    pub fn normalized(shape: SystemShape, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = vector_norm(&amplitudes);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized { norm });
        }
        amplitudes.iter_mut().for_each(|z| *z /= norm);
        Self::new(shape, amplitudes)
    }

    pub fn shape(&self) -> &SystemShape {
        &self.shape
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn density(&self) -> DensityMatrix {
        let mat = ComplexMatrix::outer(&self.amplitudes, &self.amplitudes);
        DensityMatrix::from_parts_unchecked(self.shape.clone(), mat)
    }

    pub fn reduced(&self, keep: &[usize]) -> Result<DensityMatrix> {
        self.density().partial_trace(keep)
    }
}
