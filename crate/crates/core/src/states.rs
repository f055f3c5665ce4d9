//! Named test states.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;

use crate::linalg::{ComplexMatrix, DensityMatrix, PureState, SystemShape};
use crate::{Error, Result};

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `|Φ⁺⟩ = (|00⟩ + |11⟩)/√2`.
pub fn bell_phi_plus() -> PureState {
    let h = core::f64::consts::FRAC_1_SQRT_2;
    PureState::new(
        SystemShape::qubits(2).expect("2x2"),
        vec![real(h), real(0.), real(0.), real(h)],
    )
    .expect("normalized")
}

/// `|Ψ⁻⟩ = (|01⟩ − |10⟩)/√2`.
pub fn singlet() -> PureState {
    let h = core::f64::consts::FRAC_1_SQRT_2;
    PureState::new(
        SystemShape::qubits(2).expect("2x2"),
        vec![real(0.), real(h), real(-h), real(0.)],
    )
    .expect("normalized")
}

/// `Σᵢ |ii⟩/√d` on `d×d`.
pub fn maximally_entangled(d: usize) -> Result<PureState> {
    let shape = SystemShape::new(vec![d, d])?;
    let amp = 1.0 / (d as f64).sqrt();
    let v = (0..d * d)
        .map(|i| {
            if i % (d + 1) == 0 {
                real(amp)
            } else {
                real(0.)
            }
        })
        .collect();
    PureState::normalized(shape, v)
}

/// `(|0…0⟩ + |1…1⟩)/√2` on `n ≥ 2` qubits.
pub fn ghz(n: usize) -> Result<PureState> {
    if n < 2 {
        return Err(Error::WrongSubsystemCount {
            expected: "at least 2",
            found: n,
        });
    }
    let shape = SystemShape::qubits(n)?;
    let d = shape.total_dim();
    let mut v = vec![real(0.); d];
    v[0] = real(1.0);
    v[d - 1] = real(1.0);
    PureState::normalized(shape, v)
}

/// Equal superposition of the `n` single-excitation basis states.
pub fn w_state(n: usize) -> Result<PureState> {
    if n < 2 {
        return Err(Error::WrongSubsystemCount {
            expected: "at least 2",
            found: n,
        });
    }
    let shape = SystemShape::qubits(n)?;
    let mut v = vec![real(0.); shape.total_dim()];
    for k in 0..n {
        v[1 << k] = real(1.0);
    }
    PureState::normalized(shape, v)
}

/// Computational basis product state `|x₁ x₂ …⟩`.
pub fn product_basis_state(shape: &SystemShape, digits: &[usize]) -> Result<PureState> {
    if digits.len() != shape.len() {
        return Err(Error::DimensionMismatch {
            expected: shape.len(),
            found: digits.len(),
        });
    }
    for (&x, &d) in digits.iter().zip(shape.dims()) {
        if x >= d {
            return Err(Error::ParameterOutOfRange {
                name: "basis digit",
                value: x as f64,
            });
        }
    }
    let mut v = vec![real(0.); shape.total_dim()];
    v[shape.compose(digits)] = real(1.0);
    PureState::new(shape.clone(), v)
}

/// Werner state `p|Ψ⁻⟩⟨Ψ⁻| + (1 − p)𝟙/4`, `p ∈ [0, 1]`.
pub fn werner(p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParameterOutOfRange {
            name: "p",
            value: p,
        });
    }
    let shape = SystemShape::qubits(2)?;
    let s = singlet();
    let mat = &ComplexMatrix::outer(s.amplitudes(), s.amplitudes()).scale(p)
        + &ComplexMatrix::identity(4).scale((1.0 - p) / 4.0);
    DensityMatrix::new(shape, mat)
}

/// Tensor product of local density matrices, in subsystem order.
pub fn product_state(parts: &[DensityMatrix]) -> Result<DensityMatrix> {
    let first = parts.first().ok_or(Error::EmptySelection)?;
    let dims: Vec<usize> = parts
        .iter()
        .flat_map(|p| p.shape().dims().iter().copied())
        .collect();
    let mat = parts[1..]
        .iter()
        .fold(first.matrix().clone(), |acc, p| acc.kron(p.matrix()));
    DensityMatrix::new(SystemShape::new(dims)?, mat)
}
