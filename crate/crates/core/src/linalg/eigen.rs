//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.
//!
//! Each rotation first removes the phase of the pivot `a_pq`, then applies the
//! real symmetric Jacobi rotation to the resulting 2x2 block. Sweeps continue
//! until the off-diagonal Frobenius mass falls below `ε²·‖A‖_F`.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::Float;

use super::ComplexMatrix;
use crate::{tol, Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with matching eigenvector columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// `V·f(Λ)·V†`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.values.len();
        let mapped: Vec<f64> = self.values.iter().map(|&v| f(v)).collect();
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| self.vectors[(i, k)] * self.vectors[(j, k)].conj() * mapped[k])
                .sum()
        })
    }

    pub fn min(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }
}

/// Eigendecomposition of `(A + A†)/2`.
pub fn eig_hermitian(a: &ComplexMatrix) -> Result<HermitianEigen> {
    let n = a.ensure_square()?;
    let mut m = a.hermitian_part();
    let mut v = ComplexMatrix::identity(n);

    let scale = m.frobenius_norm();
    if scale == 0.0 || n == 1 {
        let values = (0..n).map(|i| m[(i, i)].re).collect();
        return Ok(HermitianEigen { values, vectors: v });
    }
    let threshold = (f64::EPSILON * scale) * (f64::EPSILON * scale);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[(i, j)].norm_sqr())
            .sum();
        if off <= threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let values = order.iter().map(|&i| m[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues only, ascending.
pub fn eigvals_hermitian(a: &ComplexMatrix) -> Result<Vec<f64>> {
    eig_hermitian(a).map(|e| e.values)
}

fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    let abs = apq.norm();
    if abs == 0.0 {
        return;
    }
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let phase = apq / abs; // e^{iφ}
    let theta = (aqq - app) / (2.0 * abs);
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = m.rows();

    // J = [[c, s], [-s·e^{-iφ}, c·e^{-iφ}]] on (p, q); A ← J† A J, V ← V J.
    let sp = phase.conj() * s;
    let cp = phase.conj() * c;
    for k in 0..n {
        let akp = m[(k, p)];
        let akq = m[(k, q)];
        m[(k, p)] = akp * c - akq * sp;
        m[(k, q)] = akp * s + akq * cp;
    }
    for k in 0..n {
        let apk = m[(p, k)];
        let aqk = m[(q, k)];
        m[(p, k)] = apk * c - aqk * sp.conj();
        m[(q, k)] = apk * s + aqk * cp.conj();
    }
    m[(p, q)] = Complex64::new(0.0, 0.0);
    m[(q, p)] = Complex64::new(0.0, 0.0);
    m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * sp;
        v[(k, q)] = vkp * s + vkq * cp;
    }
}

/// Principal square root of a positive semidefinite Hermitian matrix.
///
/// Eigenvalues in `[PSD_FLOOR, 0)` are clamped to zero; anything more negative
/// is rejected.
pub fn sqrt_psd(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let deviation = a.hermiticity_deviation();
    if deviation > tol::HERMITIAN * a.max_abs().max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }
    let eig = eig_hermitian(a)?;
    let scale = eig.max().abs().max(1.0);
    if eig.min() < tol::PSD_FLOOR * scale {
        return Err(Error::NotPositive {
            min_eigenvalue: eig.min(),
        });
    }
    Ok(eig.reconstruct_with(|x| x.max(0.0).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_vec(2, 2, vec![c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]).unwrap()
    }

    fn assert_residual(a: &ComplexMatrix, eig: &HermitianEigen) {
        let n = a.rows();
        let norm = a.frobenius_norm().max(1.0);
        for k in 0..n {
            let vk = eig.vectors.column(k);
            let av = a.mat_vec(&vk);
            let res: f64 = av
                .iter()
                .zip(&vk)
                .map(|(x, y)| (x - y * eig.values[k]).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(res <= tol::EIGEN_RESIDUAL * norm, "residual {res}");
        }
        let gram = &eig.vectors.adjoint() * &eig.vectors;
        assert!(gram.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-9);
    }

    #[test]
    fn pauli_z_spectrum() {
        let z = ComplexMatrix::from_real_diagonal(&[1., -1.]);
        let e = eig_hermitian(&z).unwrap();
        assert_eq!(e.values, vec![-1.0, 1.0]);
    }

    #[test]
    fn pauli_x_spectrum_and_vectors() {
        let e = eig_hermitian(&sigma_x()).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
        let h = core::f64::consts::FRAC_1_SQRT_2;
        // up to a global phase: |⟨(|0⟩ - |1⟩)/√2 | v₀⟩| = 1
        let minus = [c(h, 0.), c(-h, 0.)];
        let plus = [c(h, 0.), c(h, 0.)];
        let ov0 = super::super::inner(&minus, &e.vectors.column(0)).norm();
        let ov1 = super::super::inner(&plus, &e.vectors.column(1)).norm();
        assert!((ov0 - 1.0).abs() < 1e-12 && (ov1 - 1.0).abs() < 1e-12);
        assert_residual(&sigma_x(), &e);
    }

    #[test]
    fn half_identity_plus_quarter_x() {
        let a = &ComplexMatrix::identity(2).scale(0.5) + &sigma_x().scale(0.25);
        let e = eig_hermitian(&a).unwrap();
        assert!((e.values[0] - 0.25).abs() < 1e-14);
        assert!((e.values[1] - 0.75).abs() < 1e-14);
    }

    #[test]
    fn complex_hermitian_residual() {
        let a = ComplexMatrix::from_fn(5, 5, |i, j| {
            if i == j {
                c(i as f64 - 2.0, 0.0)
            } else if i < j {
                c((i + 2 * j) as f64 * 0.1, (j as f64 - i as f64) * 0.3)
            } else {
                c((j + 2 * i) as f64 * 0.1, -(i as f64 - j as f64) * 0.3)
            }
        });
        let e = eig_hermitian(&a).unwrap();
        assert_residual(&a, &e);
        assert!(e.reconstruct_with(|x| x).max_abs_diff(&a) < 1e-12);
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn non_square_rejected() {
        assert!(matches!(
            eig_hermitian(&ComplexMatrix::zeros(2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn sqrt_examples() {
        let q = ComplexMatrix::identity(4).scale(0.25);
        assert!(
            sqrt_psd(&q)
                .unwrap()
                .max_abs_diff(&ComplexMatrix::identity(4).scale(0.5))
                < 1e-14
        );

        let d = ComplexMatrix::from_real_diagonal(&[4., 1.]);
        assert!(
            sqrt_psd(&d)
                .unwrap()
                .max_abs_diff(&ComplexMatrix::from_real_diagonal(&[2., 1.]))
                < 1e-14
        );

        let h = core::f64::consts::FRAC_1_SQRT_2;
        let bell = [c(h, 0.), c(0., 0.), c(0., 0.), c(h, 0.)];
        let p = ComplexMatrix::outer(&bell, &bell);
        assert!(sqrt_psd(&p).unwrap().max_abs_diff(&p) < 1e-12);
    }

    #[test]
    fn sqrt_rejects_negative() {
        let d = ComplexMatrix::from_real_diagonal(&[1., -1e-6]);
        assert!(matches!(sqrt_psd(&d), Err(Error::NotPositive { .. })));
        // within the clamp floor
        let d = ComplexMatrix::from_real_diagonal(&[1., -1e-12]);
        assert!(sqrt_psd(&d).is_ok());
    }
}
