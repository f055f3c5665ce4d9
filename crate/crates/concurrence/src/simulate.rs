//! Parallel batch simulation.

use concurrence_core::ensembles::simulate_sample;
use concurrence_core::{BoundsEvaluator, EnsembleSpec, SampleRow};
use rayon::prelude::*;

use crate::error::{CliError, CliResult};

/// Runs the batch on `workers` threads (0 picks the rayon default). Rows
/// come back in index order and depend only on the spec.
pub fn run(spec: &EnsembleSpec, workers: usize) -> CliResult<Vec<SampleRow>> {
    let evaluator = BoundsEvaluator::new(&spec.shape)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::BadInput(format!("thread pool: {e}")))?;
    let rows = pool.install(|| {
        (0..spec.samples)
            .into_par_iter()
            .map(|i| simulate_sample(spec, &evaluator, i))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub samples: usize,
    pub lower_range: (f64, f64),
    pub upper_range: (f64, f64),
    pub offset_range: (f64, f64),
}

fn range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
        (lo.min(x), hi.max(x))
    })
}

impl Summary {
    pub fn of(rows: &[SampleRow]) -> Self {
        Summary {
            samples: rows.len(),
            lower_range: range(rows.iter().map(|r| r.lower)),
            upper_range: range(rows.iter().map(|r| r.upper)),
            offset_range: range(rows.iter().map(|r| r.offset)),
        }
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "samples {}", self.samples)?;
        writeln!(
            f,
            "lower   min {:.9} max {:.9}",
            self.lower_range.0, self.lower_range.1
        )?;
        writeln!(
            f,
            "upper   min {:.9} max {:.9}",
            self.upper_range.0, self.upper_range.1
        )?;
        write!(
            f,
            "offset  {:.9} (spread {:.1e})",
            self.offset_range.0,
            self.offset_range.1 - self.offset_range.0
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use concurrence_core::ensembles::simulate_batch;
    use concurrence_core::SystemShape;

    #[test]
    fn parallel_matches_sequential() {
        let spec = EnsembleSpec::new(SystemShape::new(vec![2, 2]).unwrap(), 0.9, 64, 5).unwrap();
        let seq = simulate_batch(&spec).unwrap();
        for workers in [1, 3, 8] {
            assert_eq!(run(&spec, workers).unwrap(), seq);
        }
    }

    #[test]
    fn summary_ranges() {
        let spec = EnsembleSpec::new(SystemShape::new(vec![3, 3]).unwrap(), 0.98, 20, 1).unwrap();
        let s = Summary::of(&run(&spec, 2).unwrap());
        assert_eq!(s.samples, 20);
        assert!((s.offset_range.0 - 0.04).abs() < 1e-9 && (s.offset_range.1 - 0.04).abs() < 1e-9);
        assert!(s.lower_range.0 <= s.lower_range.1);
    }
}
