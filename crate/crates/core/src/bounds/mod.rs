//! Observable upper and lower bounds on squared concurrence.
//!
//! Each bound is available in two independent forms: a closed expression in
//! reduced purities, and the literal two-copy expectation `Tr(ρ⊗ρ·O)` against
//! the dense operator from [`crate::projectors`]. [`BoundsEvaluator`] computes
//! both and refuses to report a value when they disagree by more than
//! [`tol::CROSS_CHECK`].

mod entropy;
mod pure;
mod two_qubit;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;

pub use entropy::{entropy_checks, linear_entropy, universal_inverter, EntropyReport};
pub use pure::{pure_concurrence_bipartite, pure_concurrence_multipartite};
pub use two_qubit::{
    sigma_y_sigma_y, tighter_upper_two_qubit, tilde_two_qubit, two_qubit_report,
    wootters_concurrence, wootters_lambdas, TwoQubitReport,
};

use crate::linalg::{DensityMatrix, SystemShape};
use crate::projectors::{
    bipartite_observables, multipartite_observables, BipartiteObservables, Label,
    MultipartiteObservables,
};
use crate::{tol, Error, Result};

/// Bipartite bounds in purity form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BipartiteBounds {
    pub purity: f64,
    pub purity_a: f64,
    pub purity_b: f64,
    /// `2(1 − Tr ρ_A²)`.
    pub upper_k1: f64,
    /// `2(1 − Tr ρ_B²)`.
    pub upper_k2: f64,
    /// `2(Tr ρ² − Tr ρ_A²)`.
    pub lower_v1: f64,
    /// `2(Tr ρ² − Tr ρ_B²)`.
    pub lower_v2: f64,
    /// `⟨4P₋⊗P₋⟩ = 1 + Tr ρ² − Tr ρ_A² − Tr ρ_B²`.
    pub pure_observable: f64,
}

impl BipartiteBounds {
    /// `2(1 − Tr ρ²)`, common to both pairs.
    pub fn offset(&self) -> f64 {
        2.0 * (1.0 - self.purity)
    }

    pub fn upper_mean(&self) -> f64 {
        0.5 * (self.upper_k1 + self.upper_k2)
    }

    pub fn lower_mean(&self) -> f64 {
        0.5 * (self.lower_v1 + self.lower_v2)
    }
}

fn require_bipartite(shape: &SystemShape) -> Result<()> {
    match shape.len() {
        2 => Ok(()),
        found => Err(Error::WrongSubsystemCount {
            expected: "exactly 2",
            found,
        }),
    }
}

fn require_multipartite(shape: &SystemShape) -> Result<()> {
    match shape.len() {
        n if n >= 2 => Ok(()),
        found => Err(Error::WrongSubsystemCount {
            expected: "at least 2",
            found,
        }),
    }
}

/// Bipartite bounds from reduced purities alone.
pub fn bipartite_bounds_from_purities(rho: &DensityMatrix) -> Result<BipartiteBounds> {
    require_bipartite(rho.shape())?;
    let purity = rho.purity();
    let purity_a = rho.reduced_purity(&[0])?;
    let purity_b = rho.reduced_purity(&[1])?;
    Ok(BipartiteBounds {
        purity,
        purity_a,
        purity_b,
        upper_k1: 2.0 * (1.0 - purity_a),
        upper_k2: 2.0 * (1.0 - purity_b),
        lower_v1: 2.0 * (purity - purity_a),
        lower_v2: 2.0 * (purity - purity_b),
        pure_observable: 1.0 + purity - purity_a - purity_b,
    })
}

/// Multipartite bounds in purity form.
#[derive(Debug, Clone, PartialEq)]
pub struct MultipartiteBounds {
    pub purity: f64,
    /// `(subset, Tr ρ_subset²)` for all `2^N − 2` proper nonempty subsets.
    pub reduced_purities: Vec<(Vec<usize>, f64)>,
    /// `2^{2−N}[(2^N − 2) − Σ Tr ρᵢ²]`.
    pub upper_k: f64,
    /// `upper_k − 4(1 − 2^{1−N})(1 − Tr ρ²)`.
    pub lower_v: f64,
    /// `⟨4(𝐏₊ − ⊗P₊)⟩ = upper_k − 2(1 − 2^{1−N})(1 − Tr ρ²)`.
    pub pure_observable: f64,
}

impl MultipartiteBounds {
    pub fn offset(&self) -> f64 {
        self.upper_k - self.lower_v
    }
}

/// `4(1 − 2^{1−N})(1 − Tr ρ²)`.
pub fn multipartite_offset(n: usize, purity: f64) -> f64 {
    4.0 * (1.0 - 2f64.powi(1 - n as i32)) * (1.0 - purity)
}

/// Multipartite bounds from reduced purities alone.
pub fn multipartite_bounds_from_purities(rho: &DensityMatrix) -> Result<MultipartiteBounds> {
    let shape = rho.shape();
    require_multipartite(shape)?;
    let n = shape.len();
    let purity = rho.purity();
    let reduced_purities = shape
        .proper_subsets()
        .into_iter()
        .map(|s| rho.reduced_purity(&s).map(|p| (s, p)))
        .collect::<Result<Vec<_>>>()?;
    let sum: f64 = reduced_purities.iter().map(|(_, p)| p).sum();
    let upper_k = 2f64.powi(2 - n as i32) * ((2f64.powi(n as i32) - 2.0) - sum);
    let offset = multipartite_offset(n, purity);
    Ok(MultipartiteBounds {
        purity,
        reduced_purities,
        upper_k,
        lower_v: upper_k - offset,
        pure_observable: upper_k - 0.5 * offset,
    })
}

/// Bipartite bounds, each checked against the literal two-copy expectation.
pub fn bipartite_bounds(rho: &DensityMatrix) -> Result<BipartiteBounds> {
    BoundsEvaluator::new(rho.shape())?.bipartite(rho)
}

/// Multipartite bounds, each checked against the literal two-copy expectation.
pub fn multipartite_bounds(rho: &DensityMatrix) -> Result<MultipartiteBounds> {
    BoundsEvaluator::new(rho.shape())?.multipartite(rho)
}

/// Subsystem subset with its reduced purity (0-based indices).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ReducedPurity {
    pub subsystems: Vec<usize>,
    pub purity: f64,
}

/// Everything computed for one state.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundsReport {
    pub dims: Vec<usize>,
    /// `Tr ρ²`.
    pub purity: f64,
    pub reduced_purities: Vec<ReducedPurity>,
    /// `K₁`, `K₂` (bipartite) and `K`; for two subsystems `K = (K₁ + K₂)/2`.
    pub upper: BTreeMap<Label, f64>,
    /// `V₁`, `V₂` (bipartite) and `V`; for two subsystems `V = (V₁ + V₂)/2`.
    pub lower: BTreeMap<Label, f64>,
    /// Expectation of the pure-state observable `A`.
    pub pure_observable: f64,
    /// Upper minus lower, shared by every matched pair.
    pub offset: f64,
    /// Largest deviation between purity forms and literal expectations.
    pub max_cross_check_deviation: f64,
    pub two_qubit: Option<TwoQubitReport>,
    pub entropy: Option<EntropyReport>,
}

impl BoundsReport {
    /// The `K` value: `(K₁ + K₂)/2` for bipartite states.
    pub fn headline_upper(&self) -> f64 {
        self.upper[&Label::K]
    }

    /// The `V` value: `(V₁ + V₂)/2` for bipartite states.
    pub fn headline_lower(&self) -> f64 {
        self.lower[&Label::V]
    }

    /// Matched `(upper, lower)` label pairs present in this report.
    pub fn pairs(&self) -> Vec<(Label, Label)> {
        [
            (Label::K1, Label::V1),
            (Label::K2, Label::V2),
            (Label::K, Label::V),
        ]
        .into_iter()
        .filter(|(u, l)| self.upper.contains_key(u) && self.lower.contains_key(l))
        .collect()
    }
}

/// Caches the dense observables for one shape and evaluates states against
/// both the purity forms and the literal expectations.
#[derive(Debug, Clone)]
pub struct BoundsEvaluator {
    shape: SystemShape,
    bipartite: Option<BipartiteObservables>,
    multipartite: MultipartiteObservables,
}

impl BoundsEvaluator {
    pub fn new(shape: &SystemShape) -> Result<Self> {
        require_multipartite(shape)?;
        let bipartite = if shape.len() == 2 {
            Some(bipartite_observables(shape)?)
        } else {
            None
        };
        Ok(Self {
            shape: shape.clone(),
            bipartite,
            multipartite: multipartite_observables(shape)?,
        })
    }

    pub fn shape(&self) -> &SystemShape {
        &self.shape
    }

    pub fn bipartite_observables(&self) -> Option<&BipartiteObservables> {
        self.bipartite.as_ref()
    }

    pub fn multipartite_observables(&self) -> &MultipartiteObservables {
        &self.multipartite
    }

    fn check(&self, label: Label, purity_form: f64, literal: f64) -> Result<f64> {
        let dev = (purity_form - literal).abs();
        if dev > tol::CROSS_CHECK || !dev.is_finite() {
            return Err(Error::CrossCheck {
                label,
                purity_form,
                literal,
            });
        }
        Ok(dev)
    }

    /// `(label, purity form, literal expectation)` for every observable
    /// defined on this shape.
    pub fn compare(&self, rho: &DensityMatrix) -> Result<Vec<(Label, f64, f64)>> {
        let mut out = Vec::with_capacity(7);
        if let Some(obs) = &self.bipartite {
            let b = bipartite_bounds_from_purities(rho)?;
            out.push((Label::K1, b.upper_k1, obs.k1.expectation(rho)?));
            out.push((Label::K2, b.upper_k2, obs.k2.expectation(rho)?));
            out.push((Label::V1, b.lower_v1, obs.v1.expectation(rho)?));
            out.push((Label::V2, b.lower_v2, obs.v2.expectation(rho)?));
            out.push((Label::A, b.pure_observable, obs.a.expectation(rho)?));
        }
        let m = multipartite_bounds_from_purities(rho)?;
        out.push((Label::K, m.upper_k, self.multipartite.k.expectation(rho)?));
        out.push((Label::V, m.lower_v, self.multipartite.v.expectation(rho)?));
        if self.bipartite.is_none() {
            out.push((
                Label::A,
                m.pure_observable,
                self.multipartite.a.expectation(rho)?,
            ));
        }
        Ok(out)
    }

    fn require_shape(&self, rho: &DensityMatrix) -> Result<()> {
        if rho.shape() != &self.shape {
            return Err(Error::DimensionMismatch {
                expected: self.shape.total_dim(),
                found: rho.dim(),
            });
        }
        Ok(())
    }

    /// Bipartite bounds, cross-checked.
    pub fn bipartite(&self, rho: &DensityMatrix) -> Result<BipartiteBounds> {
        self.require_shape(rho)?;
        let obs = self.bipartite.as_ref().ok_or(Error::WrongSubsystemCount {
            expected: "exactly 2",
            found: self.shape.len(),
        })?;
        let b = bipartite_bounds_from_purities(rho)?;
        self.check(Label::K1, b.upper_k1, obs.k1.expectation(rho)?)?;
        self.check(Label::K2, b.upper_k2, obs.k2.expectation(rho)?)?;
        self.check(Label::V1, b.lower_v1, obs.v1.expectation(rho)?)?;
        self.check(Label::V2, b.lower_v2, obs.v2.expectation(rho)?)?;
        self.check(Label::A, b.pure_observable, obs.a.expectation(rho)?)?;
        Ok(b)
    }

    /// Multipartite bounds, cross-checked.
    pub fn multipartite(&self, rho: &DensityMatrix) -> Result<MultipartiteBounds> {
        self.require_shape(rho)?;
        let m = multipartite_bounds_from_purities(rho)?;
        self.check(Label::K, m.upper_k, self.multipartite.k.expectation(rho)?)?;
        self.check(Label::V, m.lower_v, self.multipartite.v.expectation(rho)?)?;
        self.check(
            Label::A,
            m.pure_observable,
            self.multipartite.a.expectation(rho)?,
        )?;
        Ok(m)
    }

    /// Full report: bounds, purities, offset, two-qubit extras and entropy
    /// verdicts (the last two only where defined).
    pub fn report(&self, rho: &DensityMatrix) -> Result<BoundsReport> {
        self.require_shape(rho)?;
        let mut max_dev: f64 = 0.0;
        for (label, purity_form, literal) in self.compare(rho)? {
            max_dev = max_dev.max(self.check(label, purity_form, literal)?);
        }
        let m = multipartite_bounds_from_purities(rho)?;
        let mut upper = BTreeMap::new();
        let mut lower = BTreeMap::new();
        upper.insert(Label::K, m.upper_k);
        lower.insert(Label::V, m.lower_v);
        let mut pure_observable = m.pure_observable;
        let mut entropy = None;
        if self.shape.len() == 2 {
            let b = bipartite_bounds_from_purities(rho)?;
            upper.insert(Label::K1, b.upper_k1);
            upper.insert(Label::K2, b.upper_k2);
            lower.insert(Label::V1, b.lower_v1);
            lower.insert(Label::V2, b.lower_v2);
            pure_observable = b.pure_observable;
            entropy = Some(entropy_checks(rho)?);
        }
        let two_qubit = if self.shape.is_two_qubit() {
            Some(two_qubit_report(rho)?)
        } else {
            None
        };
        Ok(BoundsReport {
            dims: self.shape.dims().to_vec(),
            purity: m.purity,
            reduced_purities: m
                .reduced_purities
                .into_iter()
                .map(|(subsystems, purity)| ReducedPurity { subsystems, purity })
                .collect(),
            upper,
            lower,
            pure_observable,
            offset: m.upper_k - m.lower_v,
            max_cross_check_deviation: max_dev,
            two_qubit,
            entropy,
        })
    }
}

/// One-shot report for a state.
pub fn report(rho: &DensityMatrix) -> Result<BoundsReport> {
    BoundsEvaluator::new(rho.shape())?.report(rho)
}
