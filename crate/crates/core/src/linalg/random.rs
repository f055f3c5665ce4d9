//! Seeded random states.
//!
//! Every stream is a ChaCha8 generator keyed by a 64-bit seed; independent
//! streams are selected with the ChaCha stream counter, so sample `i` of a
//! batch draws from `(seed, i)` regardless of evaluation order.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use super::{inner, vector_norm, ComplexMatrix, DensityMatrix, PureState, SystemShape};

/// The generator used throughout the crate.
pub type StreamRng = ChaCha8Rng;

/// Independent generator for `(seed, stream)`.
pub fn stream_rng(seed: u64, stream: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im)
}

/// Haar-distributed pure state: `D` i.i.d. complex Gaussians, normalized.
pub fn haar_random_pure<R: Rng + ?Sized>(shape: &SystemShape, rng: &mut R) -> PureState {
    loop {
        let v: Vec<Complex64> = (0..shape.total_dim())
            .map(|_| complex_gaussian(rng))
            .collect();
        if vector_norm(&v) > 0.0 {
            return PureState::normalized(shape.clone(), v).expect("nonzero Gaussian vector");
        }
    }
}

/// Haar-distributed `d×d` unitary (Gram–Schmidt on a complex Ginibre matrix).
/// Columns form an orthonormal basis.
pub fn haar_random_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    while cols.len() < d {
        let mut v: Vec<Complex64> = (0..d).map(|_| complex_gaussian(rng)).collect();
        for _ in 0..2 {
            for u in &cols {
                let proj = inner(u, &v);
                v.iter_mut().zip(u).for_each(|(x, y)| *x -= proj * y);
            }
        }
        let norm = vector_norm(&v);
        if norm > 1e-8 {
            v.iter_mut().for_each(|x| *x /= norm);
            cols.push(v);
        }
    }
    ComplexMatrix::from_fn(d, d, |i, j| cols[j][i])
}

/// Mixture of `rank` Haar-random pure states with weights drawn uniformly
/// from the probability simplex. Generic (non-degenerate) spectrum for
/// `rank ≥ D`.
pub fn random_mixture<R: Rng + ?Sized>(
    shape: &SystemShape,
    rank: usize,
    rng: &mut R,
) -> DensityMatrix {
    let rank = rank.max(1);
    let weights: Vec<f64> = (0..rank).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = weights.iter().sum();
    let d = shape.total_dim();
    let mut mat = ComplexMatrix::zeros(d, d);
    for w in weights {
        let psi = haar_random_pure(shape, rng);
        let amp = psi.amplitudes();
        mat = &mat + &ComplexMatrix::outer(amp, amp).scale(w / total);
    }
    DensityMatrix::from_parts_unchecked(shape.clone(), mat.hermitian_part())
}
