//! JSON state files: `{"dims": [..], "matrix": [[{"re": .., "im": ..}, ..], ..]}`.

use std::fs;
use std::io::Read;
use std::path::Path;

use concurrence_core::{tol, ComplexMatrix, DensityMatrix, SystemShape, C64};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub dims: Vec<usize>,
    /// Row-major.
    pub matrix: Vec<Vec<Entry>>,
}

impl StateFile {
    pub fn from_density(rho: &DensityMatrix) -> Self {
        let m = rho.matrix();
        let matrix = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .map(|z| Entry { re: z.re, im: z.im })
                    .collect()
            })
            .collect();
        StateFile {
            dims: rho.shape().dims().to_vec(),
            matrix,
        }
    }

    /// Validates shape and physicality at the external-file tolerance.
    pub fn to_density(&self) -> CliResult<DensityMatrix> {
        let shape = SystemShape::new(self.dims.clone())
            .map_err(|e| CliError::BadInput(format!("dims: {e}")))?;
        let d = shape.total_dim();
        if self.matrix.len() != d {
            return Err(CliError::BadInput(format!(
                "matrix has {} rows, dims {} need {d}",
                self.matrix.len(),
                shape
            )));
        }
        let mut data = Vec::with_capacity(d * d);
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != d {
                return Err(CliError::BadInput(format!(
                    "row {i} has {} entries, expected {d}",
                    row.len()
                )));
            }
            data.extend(row.iter().map(|e| C64::new(e.re, e.im)));
        }
        let mat = ComplexMatrix::from_vec(d, d, data)?;
        Ok(DensityMatrix::with_tolerance(
            shape,
            mat,
            tol::EXTERNAL_STATE,
        )?)
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text)
            .map_err(|e| CliError::BadInput(format!("malformed state file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("state file serializes")
    }
}

/// Reads a state file; `-` reads standard input.
pub fn load_state(path: &Path) -> CliResult<DensityMatrix> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::io("reading standard input", e))?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("reading {}", path.display()), e))?
    };
    StateFile::from_json(&text)?.to_density()
}
