use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Local subsystem dimensions `(d₁, …, d_N)`.
///
/// Subsystem 0 is the most significant tensor factor: the global basis index
/// of `|x₀ x₁ … x_{N-1}⟩` is `((x₀·d₁ + x₁)·d₂ + …)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "Vec<usize>", into = "Vec<usize>"))]
pub struct SystemShape {
    dims: Vec<usize>,
}

impl SystemShape {
    pub fn new(dims: impl Into<Vec<usize>>) -> Result<Self> {
        let dims = dims.into();
        if dims.is_empty() || dims.iter().any(|&d| d < 2) {
            return Err(Error::InvalidShape { dims });
        }
        Ok(Self { dims })
    }

    /// `N` qubits.
    pub fn qubits(n: usize) -> Result<Self> {
        Self::new(alloc::vec![2; n])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of subsystems `N`.
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `D = ∏ dᵢ`.
    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_two_qubit(&self) -> bool {
        self.dims == [2, 2]
    }

    /// Product of the local dimensions in `subset`.
    pub fn subset_dim(&self, subset: &[usize]) -> usize {
        subset.iter().map(|&i| self.dims[i]).product()
    }

    /// Splits a global basis index into per-subsystem digits.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = alloc::vec![0; self.dims.len()];
        for (slot, &d) in out.iter_mut().zip(&self.dims).rev() {
            *slot = index % d;
            index /= d;
        }
        out
    }

    /// Inverse of [`digits`](Self::digits).
    pub fn compose(&self, digits: &[usize]) -> usize {
        digits
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&x, &d)| acc * d + x)
    }

    /// Validates a subsystem selection and returns it sorted ascending.
    pub fn selection(&self, subset: &[usize]) -> Result<Vec<usize>> {
        if subset.is_empty() {
            return Err(Error::EmptySelection);
        }
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateSubsystem { index: w[0] });
            }
        }
        if let Some(&index) = sorted.iter().find(|&&i| i >= self.dims.len()) {
            return Err(Error::SubsystemOutOfRange {
                index,
                subsystems: self.dims.len(),
            });
        }
        Ok(sorted)
    }

    /// Shape of the subsystems in a (validated, sorted) subset.
    pub fn restrict(&self, subset: &[usize]) -> Result<SystemShape> {
        let sel = self.selection(subset)?;
        Self::new(sel.iter().map(|&i| self.dims[i]).collect::<Vec<_>>())
    }

    /// All proper nonempty subsets of subsystem indices, `2^N − 2` of them,
    /// ordered by bitmask.
    pub fn proper_subsets(&self) -> Vec<Vec<usize>> {
        let n = self.dims.len();
        (1..(1usize << n) - 1)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
            .collect()
    }

    /// The `2^{N−1} − 1` unordered bipartitions `{k, k̄}`, each reported as
    /// the side not containing the last subsystem.
    pub fn bipartitions(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.dims.len();
        if n < 2 {
            return Vec::new();
        }
        (1..(1usize << (n - 1)))
            .map(|mask| {
                let k: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let kbar: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
                (k, kbar)
            })
            .collect()
    }

    /// Complement of a subset.
    pub fn complement(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.dims.len())
            .filter(|i| !subset.contains(i))
            .collect()
    }
}

impl TryFrom<Vec<usize>> for SystemShape {
    type Error = Error;

    fn try_from(dims: Vec<usize>) -> Result<Self> {
        Self::new(dims)
    }
}

impl From<SystemShape> for Vec<usize> {
    fn from(shape: SystemShape) -> Self {
        shape.dims
    }
}

/// Formats as `2x3x2`.
impl fmt::Display for SystemShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Parses `2x3x2` (lowercase `x` separator).
impl FromStr for SystemShape {
    type Err = ShapeParseError;

    fn from_str(s: &str) -> core::result::Result<Self, ShapeParseError> {
        let dims = s
            .split('x')
            .map(|part| part.trim().parse::<usize>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| ShapeParseError(s.into()))?;
        Self::new(dims).map_err(|_| ShapeParseError(s.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid dims `{0}`: expected local dimensions >= 2 joined by `x`, e.g. 2x3")]
pub struct ShapeParseError(pub String);
