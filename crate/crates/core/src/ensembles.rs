//! Random mixed states at a prescribed purity and the upper-vs-lower bound
//! scatter batches built from them.
//!
//! States are isotropic mixtures `ρ = p|ψ⟩⟨ψ| + (1 − p)𝟙/D` with Haar-random
//! `ψ`. Since `Tr ρ² = p² + (1 − p²)/D` independently of `ψ`, the mixing weight
//! is solved in closed form and every sample hits the target purity exactly.

use alloc::vec::Vec;

#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;
use rand::Rng;

use crate::bounds::{two_qubit_report, BoundsEvaluator};
use crate::linalg::{haar_random_pure, stream_rng, ComplexMatrix, DensityMatrix, SystemShape};
use crate::{Error, Result};

/// Default number of samples per purity level.
pub const DEFAULT_SAMPLES: usize = 1000;

/// Parameters of one batch.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleSpec {
    pub shape: SystemShape,
    pub target_purity: f64,
    pub samples: usize,
    pub seed: u64,
}

impl EnsembleSpec {
    /// Requires `1/D < target_purity ≤ 1`, at least one sample and at least
    /// two subsystems.
    pub fn new(shape: SystemShape, target_purity: f64, samples: usize, seed: u64) -> Result<Self> {
        let d = shape.total_dim();
        let min = 1.0 / d as f64;
        if !(target_purity > min && target_purity <= 1.0) {
            return Err(Error::PurityOutOfRange {
                purity: target_purity,
                dim: d,
                min,
            });
        }
        if samples == 0 {
            return Err(Error::ParameterOutOfRange {
                name: "samples",
                value: 0.0,
            });
        }
        if shape.len() < 2 {
            return Err(Error::WrongSubsystemCount {
                expected: "at least 2",
                found: shape.len(),
            });
        }
        Ok(Self {
            shape,
            target_purity,
            samples,
            seed,
        })
    }
}

/// One point of the scatter.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SampleRow {
    pub index: usize,
    /// Measured `Tr ρ²`.
    pub purity: f64,
    /// `Tr[ρ⊗ρ(V₁+V₂)/2]` for two subsystems, `⟨V⟩` otherwise.
    pub lower: f64,
    /// `Tr[ρ⊗ρ(K₁+K₂)/2]` for two subsystems, `⟨K⟩` otherwise.
    pub upper: f64,
    pub offset: f64,
    /// Squared Wootters concurrence, two-qubit batches only.
    pub wootters_c_sq: Option<f64>,
}

/// `p = √((Dμ − 1)/(D − 1))`, the weight giving `Tr ρ² = μ` for
/// `ρ = p|ψ⟩⟨ψ| + (1 − p)𝟙/D`.
pub fn solve_mixing_weight(dim: usize, target_purity: f64) -> Result<f64> {
    let min = 1.0 / dim as f64;
    if dim < 2 || !(target_purity >= min && target_purity <= 1.0) {
        return Err(Error::PurityOutOfRange {
            purity: target_purity,
            dim,
            min,
        });
    }
    let d = dim as f64;
    Ok(((d * target_purity - 1.0) / (d - 1.0))
        .max(0.0)
        .sqrt()
        .min(1.0))
}

/// `p|ψ⟩⟨ψ| + (1 − p)𝟙/D` with Haar-random `ψ` and `Tr ρ² = target_purity`.
pub fn random_mixed_with_purity<R: Rng + ?Sized>(
    shape: &SystemShape,
    target_purity: f64,
    rng: &mut R,
) -> Result<DensityMatrix> {
    let d = shape.total_dim();
    let p = solve_mixing_weight(d, target_purity)?;
    let psi = haar_random_pure(shape, rng);
    let amp = psi.amplitudes();
    let mat = &ComplexMatrix::outer(amp, amp).scale(p)
        + &ComplexMatrix::identity(d).scale((1.0 - p) / d as f64);
    Ok(DensityMatrix::from_parts_unchecked(
        shape.clone(),
        mat.hermitian_part(),
    ))
}

/// Evaluates sample `index` of a batch; depends only on `(spec, index)`.
pub fn simulate_sample(
    spec: &EnsembleSpec,
    evaluator: &BoundsEvaluator,
    index: usize,
) -> Result<SampleRow> {
    let mut rng = stream_rng(spec.seed, index as u64);
    let rho = random_mixed_with_purity(&spec.shape, spec.target_purity, &mut rng)?;
    let m = evaluator.multipartite(&rho)?;
    let (lower, upper) = if spec.shape.len() == 2 {
        let b = evaluator.bipartite(&rho)?;
        (b.lower_mean(), b.upper_mean())
    } else {
        (m.lower_v, m.upper_k)
    };
    let wootters_c_sq = if spec.shape.is_two_qubit() {
        Some(two_qubit_report(&rho)?.wootters_c_sq)
    } else {
        None
    };
    Ok(SampleRow {
        index,
        purity: m.purity,
        lower,
        upper,
        offset: upper - lower,
        wootters_c_sq,
    })
}

/// Sequential batch. Parallel callers should use [`simulate_sample`] per
/// index; the output is identical.
pub fn simulate_batch(spec: &EnsembleSpec) -> Result<Vec<SampleRow>> {
    let evaluator = BoundsEvaluator::new(&spec.shape)?;
    (0..spec.samples)
        .map(|i| simulate_sample(spec, &evaluator, i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn mixing_weight_endpoints() {
        assert_eq!(solve_mixing_weight(9, 1.0).unwrap(), 1.0);
        assert_eq!(solve_mixing_weight(9, 1.0 / 9.0).unwrap(), 0.0);
        let p = solve_mixing_weight(9, 0.98).unwrap();
        assert!((p - (7.82f64 / 8.0).sqrt()).abs() < 1e-15);
        assert!((p - 0.988686).abs() < 1e-6);
        assert!(solve_mixing_weight(9, 0.1).is_err());
        assert!(solve_mixing_weight(9, 1.01).is_err());
    }

    #[test]
    fn maximally_mixed_at_minimum_purity() {
        let shape = SystemShape::new(vec![2, 2]).unwrap();
        let rho = random_mixed_with_purity(&shape, 0.25, &mut stream_rng(1, 0)).unwrap();
        assert!(
            rho.matrix()
                .max_abs_diff(&DensityMatrix::maximally_mixed(shape).into_matrix())
                < 1e-16
        );
    }

    #[test]
    fn spec_rejects_unreachable_purity() {
        let shape = SystemShape::new(vec![3, 3]).unwrap();
        assert!(EnsembleSpec::new(shape.clone(), 1.0 / 9.0, 10, 0).is_err());
        assert!(EnsembleSpec::new(shape.clone(), 0.98, 0, 0).is_err());
        assert!(EnsembleSpec::new(SystemShape::new(vec![9]).unwrap(), 0.98, 1, 0).is_err());
        assert!(EnsembleSpec::new(shape, 0.98, 1, 0).is_ok());
    }
}
