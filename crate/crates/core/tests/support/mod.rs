#![allow(dead_code)]

use concurrence_core::linalg::{
    random_mixture, stream_rng, ComplexMatrix, DensityMatrix, SystemShape,
};
use concurrence_core::C64;
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Float, One, ToPrimitive, Zero};

pub fn shape(dims: &[usize]) -> SystemShape {
    SystemShape::new(dims.to_vec()).unwrap()
}

/// Full-rank random state with a generic spectrum.
pub fn generic_state(shape: &SystemShape, seed: u64, index: u64) -> DensityMatrix {
    let d = shape.total_dim();
    random_mixture(shape, d + 2, &mut stream_rng(seed, index))
}

type Zi = Complex<BigInt>;

fn decode(x: f64) -> (BigInt, i32) {
    let (mant, exp, sign) = x.integer_decode();
    (BigInt::from(mant) * sign, i32::from(exp))
}

/// Entries of `m` as Gaussian integers times a common `2^-shift`.
fn dyadic_matrix(m: &ComplexMatrix, shift: i32) -> Vec<Vec<Zi>> {
    let to_int = |x: f64| {
        if x == 0.0 {
            return BigInt::zero();
        }
        let (mant, exp) = decode(x);
        mant << (exp + shift) as usize
    };
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| Complex::new(to_int(m[(i, j)].re), to_int(m[(i, j)].im)))
                .collect()
        })
        .collect()
}

fn min_exponent(values: impl Iterator<Item = f64>) -> i32 {
    values
        .filter(|x| *x != 0.0)
        .map(|x| decode(x).1)
        .min()
        .unwrap_or(0)
}

fn matrix_min_exponent(m: &ComplexMatrix) -> i32 {
    min_exponent(m.as_slice().iter().flat_map(|z| [z.re, z.im]))
}

fn int_mul(a: &[Vec<Zi>], b: &[Vec<Zi>]) -> Vec<Vec<Zi>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Zi::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// `num/den · 2^exp` rounded to `f64`.
fn scaled_ratio(num: &BigInt, den: &BigInt, exp: i64) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let sn = num.bits().saturating_sub(64);
    let sd = den.bits().saturating_sub(64);
    let r = (num >> sn).to_f64().unwrap() / (den >> sd).to_f64().unwrap();
    let mut e = exp + sn as i64 - sd as i64;
    let mut out = r;
    while e != 0 {
        let chunk = e.clamp(-1000, 1000);
        out *= 2f64.powi(chunk as i32);
        e -= chunk;
    }
    out
}

/// Characteristic polynomial `det(xI − M)` held exactly as
/// `2^{-scale·n} · Σ c_k (2^{scale} x)^k` with Gaussian-integer `c_k`.
pub struct ExactPoly {
    coeffs: Vec<Zi>,
    scale: i64,
}

impl ExactPoly {
    /// Faddeev–LeVerrier on the integer-scaled product `AB`; its divisions
    /// by `k` are exact.
    pub fn of_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Self {
        let shift = -matrix_min_exponent(a).min(matrix_min_exponent(b)).min(0);
        let m = int_mul(&dyadic_matrix(a, shift), &dyadic_matrix(b, shift));
        let n = m.len();
        let mut coeffs = vec![Zi::zero(); n + 1];
        coeffs[n] = Zi::one();
        let mut mk = vec![vec![Zi::zero(); n]; n];
        for k in 1..=n {
            for (i, row) in mk.iter_mut().enumerate() {
                row[i] = &row[i] + &coeffs[n - k + 1];
            }
            mk = int_mul(&m, &mk);
            let trace = (0..n).fold(Zi::zero(), |acc, i| acc + &mk[i][i]);
            let k_big = BigInt::from(k);
            assert!((&trace.re % &k_big).is_zero() && (&trace.im % &k_big).is_zero());
            coeffs[n - k] = -Complex::new(trace.re / &k_big, trace.im / &k_big);
        }
        ExactPoly {
            coeffs,
            scale: 2 * i64::from(shift),
        }
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients of `det(xI − M)` rounded to `f64`.
    pub fn rounded(&self) -> Vec<C64> {
        let n = self.degree() as i64;
        let one = BigInt::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let e = -self.scale * (n - k as i64);
                C64::new(scaled_ratio(&c.re, &one, e), scaled_ratio(&c.im, &one, e))
            })
            .collect()
    }

    /// Newton step `p(x)/p'(x)` with both values computed exactly.
    pub fn newton_step(&self, x: C64) -> Option<C64> {
        let n = self.degree();
        let f = -min_exponent([x.re, x.im].into_iter()).min(0);
        let lift = |v: f64| {
            if v == 0.0 {
                BigInt::zero()
            } else {
                let (m, e) = decode(v);
                m << (e + f) as usize
            }
        };
        // y = 2^scale · x = Y · 2^{-t}
        let mut y = Complex::new(lift(x.re), lift(x.im));
        let mut t = i64::from(f) - self.scale;
        if t < 0 {
            y = Complex::new(&y.re << (-t) as usize, &y.im << (-t) as usize);
            t = 0;
        }
        let horner = |coeffs: &[Zi]| {
            let deg = coeffs.len() - 1;
            coeffs
                .iter()
                .enumerate()
                .rev()
                .fold(Zi::zero(), |acc, (k, c)| {
                    let w = (t as usize) * (deg - k);
                    acc * &y + Complex::new(&c.re << w, &c.im << w)
                })
        };
        let value = horner(&self.coeffs);
        let deriv: Vec<Zi> = (1..=n).map(|k| &self.coeffs[k] * BigInt::from(k)).collect();
        let slope = horner(&deriv);
        if slope.is_zero() {
            return None;
        }
        // p/p' = 2^{-t}·P/P' in y units, then 2^{-scale} back to x units
        let num = value * slope.conj();
        let den = slope.norm_sqr();
        let e = -t - self.scale;
        Some(C64::new(
            scaled_ratio(&num.re, &den, e),
            scaled_ratio(&num.im, &den, e),
        ))
    }
}

fn eval(coeffs: &[C64], x: C64) -> C64 {
    coeffs
        .iter()
        .rev()
        .fold(C64::new(0.0, 0.0), |acc, &c| acc * x + c)
}

/// All roots: Durand–Kerner on rounded coefficients, then Newton steps
/// whose residuals are evaluated exactly. The exact residual keeps
/// clustered and repeated roots accurate to working precision.
pub fn poly_roots(poly: &ExactPoly) -> Vec<C64> {
    let approx = poly.rounded();
    let n = poly.degree();
    let seed = C64::new(0.4, 0.9);
    let mut roots: Vec<C64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = C64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(&approx, roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-16 {
            break;
        }
    }
    for r in roots.iter_mut() {
        let mut last = f64::INFINITY;
        for _ in 0..100 {
            let Some(step) = poly.newton_step(*r) else {
                break;
            };
            if step.norm() >= last {
                break;
            }
            *r -= step;
            last = step.norm();
            if last <= f64::EPSILON * r.norm() {
                break;
            }
        }
    }
    roots
}

/// Wootters concurrence from the eigenvalues of the non-Hermitian product
/// `ρρ̃`, via its exact characteristic polynomial. Independent of the
/// Hermitian route used by the library.
pub fn wootters_oracle(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    // σ_y⊗σ_y written out entrywise
    let mut yy = ComplexMatrix::zeros(4, 4);
    yy[(0, 3)] = C64::new(-1.0, 0.0);
    yy[(1, 2)] = C64::new(1.0, 0.0);
    yy[(2, 1)] = C64::new(1.0, 0.0);
    yy[(3, 0)] = C64::new(-1.0, 0.0);
    // flips and sign changes only, so this product is exact in f64
    let tilde = &(&yy * &m.conj()) * &yy;
    let mut lambdas: Vec<f64> = poly_roots(&ExactPoly::of_product(m, &tilde))
        .into_iter()
        .map(|r| r.re.max(0.0).sqrt())
        .collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0)
}

/// `Tr ρ_S²` by direct index contraction over digit tuples, without the
/// library's partial trace:
/// `Tr ρ_S² = Σ ρ[(a,t),(b,t)]·ρ[(b,u),(a,u)]` with `a, b` on `S`.
pub fn brute_reduced_purity(rho: &DensityMatrix, subset: &[usize]) -> f64 {
    let shape = rho.shape();
    let d = shape.total_dim();
    let m = rho.matrix();
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..d {
        let di = shape.digits(i);
        for j in 0..d {
            let dj = shape.digits(j);
            for k in 0..d {
                let dk = shape.digits(k);
                // i = (a,t), j = (b,t), k = (b,u), l = (a,u)
                let mut ok = true;
                for q in 0..shape.len() {
                    let in_s = subset.contains(&q);
                    if in_s && dj[q] != dk[q] {
                        ok = false;
                    }
                    if !in_s && di[q] != dj[q] {
                        ok = false;
                    }
                }
                if !ok {
                    continue;
                }
                let dl: Vec<usize> = (0..shape.len())
                    .map(|q| if subset.contains(&q) { di[q] } else { dk[q] })
                    .collect();
                let l = shape.compose(&dl);
                acc += m[(i, j)] * m[(k, l)];
            }
        }
    }
    acc.re
}
