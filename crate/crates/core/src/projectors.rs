//! Swap operators, (anti)symmetric projectors and the two-copy observables.
//!
//! The doubled space `H ⊗ H` is laid out canonically as (copy 1 of the full
//! system) ⊗ (copy 2 of the full system), so the basis index of `|x⟩|y⟩` is
//! `x·D + y`. Observables that are naturally written per subsystem, pairing
//! the two copies of subsystem `i` as `Hᵢ ⊗ Hᵢ`, are first assembled in that
//! paired layout and then moved to the canonical layout by an explicit basis
//! permutation. Nothing outside this module sees the paired layout.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;

use crate::linalg::{ComplexMatrix, DensityMatrix, SystemShape};
use crate::{tol, Error, Result};

/// Which two-copy observable a matrix represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Label {
    K1,
    K2,
    V1,
    V2,
    K,
    V,
    A,
    Custom,
}

impl Label {
    /// Labels whose operator must be positive semidefinite.
    pub fn is_psd(self) -> bool {
        matches!(self, Label::K1 | Label::K2 | Label::K | Label::A)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Label::K1 => "K1",
            Label::K2 => "K2",
            Label::V1 => "V1",
            Label::V2 => "V2",
            Label::K => "K",
            Label::V => "V",
            Label::A => "A",
            Label::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// Symmetric (`P₊`) or antisymmetric (`P₋`) sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
}

impl Symmetry {
    fn sign(self) -> f64 {
        match self {
            Symmetry::Symmetric => 1.0,
            Symmetry::Antisymmetric => -1.0,
        }
    }
}

/// A Hermitian operator on the doubled space of `shape`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoCopyObservable {
    shape: SystemShape,
    mat: ComplexMatrix,
    label: Label,
}

impl TwoCopyObservable {
    /// Wraps a `D²×D²` Hermitian matrix.
    pub fn new(shape: SystemShape, mat: ComplexMatrix, label: Label) -> Result<Self> {
        let d2 = shape.total_dim() * shape.total_dim();
        let n = mat.ensure_square()?;
        if n != d2 {
            return Err(Error::DimensionMismatch {
                expected: d2,
                found: n,
            });
        }
        let deviation = mat.hermiticity_deviation();
        if deviation > tol::HERMITIAN {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self { shape, mat, label })
    }

    pub fn shape(&self) -> &SystemShape {
        &self.shape
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn label(&self) -> Label {
        self.label
    }

    /// `Tr(ρ⊗ρ · O)`, contracted without materializing `ρ⊗ρ`.
    pub fn expectation(&self, rho: &DensityMatrix) -> Result<f64> {
        if rho.shape() != &self.shape {
            return Err(Error::DimensionMismatch {
                expected: self.shape.total_dim(),
                found: rho.dim(),
            });
        }
        Ok(two_copy_trace(rho.matrix(), &self.mat).re)
    }

    /// `⟨ψ|⟨ψ| O |ψ⟩|ψ⟩`.
    pub fn pure_expectation(&self, psi: &[Complex64]) -> f64 {
        let d = psi.len();
        let doubled: Vec<Complex64> = (0..d * d).map(|i| psi[i / d] * psi[i % d]).collect();
        let o_psi = self.mat.mat_vec(&doubled);
        crate::linalg::inner(&doubled, &o_psi).re
    }
}

/// `Tr((ρ⊗ρ)·O)` for a canonical-layout `O`.
pub fn two_copy_trace(rho: &ComplexMatrix, op: &ComplexMatrix) -> Complex64 {
    let d = rho.rows();
    assert_eq!(op.rows(), d * d);
    let mut acc = Complex64::new(0.0, 0.0);
    // (ρ⊗ρ)_{(a,b),(c,e)} = ρ_ac ρ_be, multiplied by O_{(c,e),(a,b)}
    for a in 0..d {
        for b in 0..d {
            let col = a * d + b;
            for c in 0..d {
                let rac = rho[(a, c)];
                if rac == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let row_base = c * d;
                let mut inner = Complex64::new(0.0, 0.0);
                for e in 0..d {
                    inner += rho[(b, e)] * op[(row_base + e, col)];
                }
                acc += rac * inner;
            }
        }
    }
    acc
}

/// Index map of the swap `W_block`: image of each canonical doubled-space
/// basis index.
fn swap_permutation(shape: &SystemShape, block: &[usize]) -> Vec<usize> {
    let d = shape.total_dim();
    (0..d * d)
        .map(|idx| {
            let mut x = shape.digits(idx / d);
            let mut y = shape.digits(idx % d);
            for &i in block {
                core::mem::swap(&mut x[i], &mut y[i]);
            }
            shape.compose(&x) * d + shape.compose(&y)
        })
        .collect()
}

/// `W_block`: exchanges, between copy 1 and copy 2, exactly the tensor factors
/// listed in `block` (0-based subsystem indices). A symmetric permutation
/// matrix with `W² = 𝟙`.
pub fn swap_operator(shape: &SystemShape, block: &[usize]) -> Result<ComplexMatrix> {
    let block = shape.selection(block)?;
    let perm = swap_permutation(shape, &block);
    let n = perm.len();
    let mut w = ComplexMatrix::zeros(n, n);
    for (src, &dst) in perm.iter().enumerate() {
        w[(dst, src)] = Complex64::new(1.0, 0.0);
    }
    Ok(w)
}

/// `(𝟙 ± W_block)/2`.
pub fn block_projector(
    shape: &SystemShape,
    block: &[usize],
    sym: Symmetry,
) -> Result<ComplexMatrix> {
    let w = swap_operator(shape, block)?;
    let n = w.rows();
    let s = sym.sign();
    Ok(ComplexMatrix::from_fn(n, n, |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        (Complex64::new(id, 0.0) + w[(i, j)] * s) * 0.5
    }))
}

/// `P₋ = (𝟙 − W_block)/2`.
pub fn antisym_projector(shape: &SystemShape, block: &[usize]) -> Result<ComplexMatrix> {
    block_projector(shape, block, Symmetry::Antisymmetric)
}

/// `P₊ = (𝟙 + W_block)/2`.
pub fn sym_projector(shape: &SystemShape, block: &[usize]) -> Result<ComplexMatrix> {
    block_projector(shape, block, Symmetry::Symmetric)
}

/// Two-copy projector of a single `d`-level subsystem built from an explicit
/// orthonormal basis (columns of `basis`):
/// `P∓ = ¼ Σ_{jk} (|αⱼαₖ⟩ ∓ |αₖαⱼ⟩)(⟨αⱼαₖ| ∓ ⟨αₖαⱼ|)`.
pub fn basis_sum_projector(basis: &ComplexMatrix, sym: Symmetry) -> Result<ComplexMatrix> {
    let d = basis.ensure_square()?;
    let s = sym.sign();
    let cols: Vec<Vec<Complex64>> = (0..d).map(|j| basis.column(j)).collect();
    let mut out = ComplexMatrix::zeros(d * d, d * d);
    for j in 0..d {
        for k in 0..d {
            let v: Vec<Complex64> = (0..d * d)
                .map(|idx| {
                    let (p, q) = (idx / d, idx % d);
                    cols[j][p] * cols[k][q] + cols[k][p] * cols[j][q] * s
                })
                .collect();
            out = &out + &ComplexMatrix::outer(&v, &v).scale(0.25);
        }
    }
    Ok(out)
}

/// Maps paired-layout indices `(x₁ y₁ x₂ y₂ …)` to canonical indices
/// `(x₁ x₂ … , y₁ y₂ …)`.
pub fn paired_to_canonical(shape: &SystemShape) -> Vec<usize> {
    let d = shape.total_dim();
    let n = shape.len();
    let pair_dims: Vec<usize> = shape.dims().iter().flat_map(|&di| [di, di]).collect();
    (0..d * d)
        .map(|mut idx| {
            let mut digits = alloc::vec![0; 2 * n];
            for (slot, &di) in digits.iter_mut().zip(&pair_dims).rev() {
                *slot = idx % di;
                idx /= di;
            }
            let x: Vec<usize> = (0..n).map(|i| digits[2 * i]).collect();
            let y: Vec<usize> = (0..n).map(|i| digits[2 * i + 1]).collect();
            shape.compose(&x) * d + shape.compose(&y)
        })
        .collect()
}

/// `⊗ᵢ Oᵢ` where `Oᵢ` acts on the two copies of subsystem `i`
/// (`dᵢ²×dᵢ²`), returned in canonical layout.
pub fn per_subsystem_product(
    shape: &SystemShape,
    factors: &[ComplexMatrix],
) -> Result<ComplexMatrix> {
    if factors.len() != shape.len() {
        return Err(Error::DimensionMismatch {
            expected: shape.len(),
            found: factors.len(),
        });
    }
    for (f, &d) in factors.iter().zip(shape.dims()) {
        let n = f.ensure_square()?;
        if n != d * d {
            return Err(Error::DimensionMismatch {
                expected: d * d,
                found: n,
            });
        }
    }
    let paired = factors[1..]
        .iter()
        .fold(factors[0].clone(), |acc, f| acc.kron(f));
    Ok(paired.permute_basis(&paired_to_canonical(shape)))
}

/// `P±` on the two copies of one `d`-level subsystem.
pub fn local_projector(d: usize, sym: Symmetry) -> Result<ComplexMatrix> {
    block_projector(&SystemShape::new(alloc::vec![d])?, &[0], sym)
}

/// `⊗ᵢ P_{sᵢ}⁽ⁱ⁾` for a sign pattern, one entry per subsystem.
pub fn pattern_product(shape: &SystemShape, pattern: &[Symmetry]) -> Result<ComplexMatrix> {
    let factors = shape
        .dims()
        .iter()
        .zip(pattern)
        .map(|(&d, &s)| local_projector(d, s))
        .collect::<Result<Vec<_>>>()?;
    per_subsystem_product(shape, &factors)
}

/// Bipartite observables `K₁, K₂, V₁, V₂, A`.
#[derive(Debug, Clone)]
pub struct BipartiteObservables {
    pub k1: TwoCopyObservable,
    pub k2: TwoCopyObservable,
    pub v1: TwoCopyObservable,
    pub v2: TwoCopyObservable,
    pub a: TwoCopyObservable,
}

impl BipartiteObservables {
    pub fn iter(&self) -> impl Iterator<Item = &TwoCopyObservable> {
        [&self.k1, &self.k2, &self.v1, &self.v2, &self.a].into_iter()
    }
}

/// `K₁ = 4P₋⁽¹⁾⊗𝟙⁽²⁾`, `K₂ = 4𝟙⁽¹⁾⊗P₋⁽²⁾`, `V₁ = 4(P₋⁽¹⁾−P₊⁽¹⁾)⊗P₋⁽²⁾`,
/// `V₂ = 4P₋⁽¹⁾⊗(P₋⁽²⁾−P₊⁽²⁾)`, `A = 4P₋⁽¹⁾⊗P₋⁽²⁾`.
pub fn bipartite_observables(shape: &SystemShape) -> Result<BipartiteObservables> {
    if shape.len() != 2 {
        return Err(Error::WrongSubsystemCount {
            expected: "exactly 2",
            found: shape.len(),
        });
    }
    let (d1, d2) = (shape.dims()[0], shape.dims()[1]);
    let minus1 = local_projector(d1, Symmetry::Antisymmetric)?;
    let plus1 = local_projector(d1, Symmetry::Symmetric)?;
    let minus2 = local_projector(d2, Symmetry::Antisymmetric)?;
    let plus2 = local_projector(d2, Symmetry::Symmetric)?;
    let id1 = ComplexMatrix::identity(d1 * d1);
    let id2 = ComplexMatrix::identity(d2 * d2);
    let diff1 = &minus1 - &plus1;
    let diff2 = &minus2 - &plus2;

    let build = |f1: &ComplexMatrix, f2: &ComplexMatrix, label| -> Result<TwoCopyObservable> {
        let m = per_subsystem_product(shape, &[f1.scale(4.0), f2.clone()])?;
        TwoCopyObservable::new(shape.clone(), m, label)
    };
    Ok(BipartiteObservables {
        k1: build(&minus1, &id2, Label::K1)?,
        k2: build(&id1, &minus2, Label::K2)?,
        v1: build(&diff1, &minus2, Label::V1)?,
        v2: build(&minus1, &diff2, Label::V2)?,
        a: build(&minus1, &minus2, Label::A)?,
    })
}

/// Globally symmetric and antisymmetric projectors `𝐏± = (𝟙 ± W_all)/2`.
pub fn global_projectors(shape: &SystemShape) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let all: Vec<usize> = (0..shape.len()).collect();
    Ok((
        block_projector(shape, &all, Symmetry::Symmetric)?,
        block_projector(shape, &all, Symmetry::Antisymmetric)?,
    ))
}

/// Multipartite observables `K`, `V`, plus `A = 4(𝐏₊ − ⊗ᵢP₊⁽ⁱ⁾)`.
#[derive(Debug, Clone)]
pub struct MultipartiteObservables {
    pub k: TwoCopyObservable,
    pub v: TwoCopyObservable,
    pub a: TwoCopyObservable,
}

/// `K = 4(𝐏₊ − ⊗P₊ + (1−2^{1−N})𝐏₋)` and `V = 4(𝐏₊ − ⊗P₊ − (1−2^{1−N})𝐏₋)`.
pub fn multipartite_observables(shape: &SystemShape) -> Result<MultipartiteObservables> {
    let n = shape.len();
    if n < 2 {
        return Err(Error::WrongSubsystemCount {
            expected: "at least 2",
            found: n,
        });
    }
    let (global_plus, global_minus) = global_projectors(shape)?;
    let all_plus = pattern_product(shape, &alloc::vec![Symmetry::Symmetric; n])?;
    let coeff = 1.0 - 2f64.powi(1 - n as i32);
    let base = &global_plus - &all_plus;
    let k = &base + &global_minus.scale(coeff);
    let v = &base - &global_minus.scale(coeff);
    Ok(MultipartiteObservables {
        k: TwoCopyObservable::new(shape.clone(), k.scale(4.0), Label::K)?,
        v: TwoCopyObservable::new(shape.clone(), v.scale(4.0), Label::V)?,
        a: TwoCopyObservable::new(shape.clone(), base.scale(4.0), Label::A)?,
    })
}
