mod support;

use concurrence_core::linalg::{haar_random_unitary, stream_rng, ComplexMatrix, SystemShape};
use concurrence_core::projectors::{
    antisym_projector, basis_sum_projector, global_projectors, multipartite_observables,
    pattern_product, swap_operator, sym_projector, Symmetry,
};
use concurrence_core::states;
use support::{generic_state, shape};

const SHAPES: &[&[usize]] = &[&[2], &[3], &[4], &[2, 2], &[2, 3], &[2, 2, 2]];

fn nonempty_blocks(s: &SystemShape) -> Vec<Vec<usize>> {
    let n = s.len();
    (1..1usize << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

#[test]
fn projector_algebra_for_every_block() {
    for dims in SHAPES {
        let s = shape(dims);
        let n = s.total_dim() * s.total_dim();
        let id = ComplexMatrix::identity(n);
        for block in nonempty_blocks(&s) {
            let m = antisym_projector(&s, &block).unwrap();
            let p = sym_projector(&s, &block).unwrap();
            let w = swap_operator(&s, &block).unwrap();
            assert!((&w * &w).max_abs_diff(&id) < 1e-12);
            assert!((&m * &m).max_abs_diff(&m) < 1e-12, "{dims:?} {block:?}");
            assert!((&p * &p).max_abs_diff(&p) < 1e-12);
            assert!(m.adjoint().max_abs_diff(&m) < 1e-12);
            assert!(p.adjoint().max_abs_diff(&p) < 1e-12);
            assert!((&m * &p).max_abs() < 1e-12);
            assert!((&m + &p).max_abs_diff(&id) < 1e-12);
        }
    }
}

/// Literal two-copy antisymmetric/symmetric projector summed over a basis,
/// written independently of the library's version.
fn basis_sum_oracle(basis: &ComplexMatrix, sign: f64) -> ComplexMatrix {
    let d = basis.rows();
    let mut out = ComplexMatrix::zeros(d * d, d * d);
    for j in 0..d {
        for k in 0..d {
            for r in 0..d * d {
                for c in 0..d * d {
                    let ket = |idx: usize| {
                        let (p, q) = (idx / d, idx % d);
                        basis[(p, j)] * basis[(q, k)] + basis[(p, k)] * basis[(q, j)] * sign
                    };
                    out[(r, c)] += ket(r) * ket(c).conj() * 0.25;
                }
            }
        }
    }
    out
}

#[test]
fn basis_sum_equals_swap_form() {
    for d in [2, 3, 4] {
        let s = shape(&[d]);
        let minus = antisym_projector(&s, &[0]).unwrap();
        let plus = sym_projector(&s, &[0]).unwrap();
        let bases = [
            ComplexMatrix::identity(d),
            haar_random_unitary(d, &mut stream_rng(5, d as u64)),
            haar_random_unitary(d, &mut stream_rng(6, d as u64)),
        ];
        for basis in &bases {
            let oracle_minus = basis_sum_oracle(basis, -1.0);
            let oracle_plus = basis_sum_oracle(basis, 1.0);
            assert!(oracle_minus.max_abs_diff(&minus) < 1e-12, "d={d}");
            assert!(oracle_plus.max_abs_diff(&plus) < 1e-12, "d={d}");
            let lib = basis_sum_projector(basis, Symmetry::Antisymmetric).unwrap();
            assert!(lib.max_abs_diff(&oracle_minus) < 1e-12);
        }
        assert_eq!(minus.trace().re.round() as usize, d * (d - 1) / 2);
        assert_eq!(plus.trace().re.round() as usize, d * (d + 1) / 2);
    }
}

fn sign_patterns(n: usize) -> Vec<Vec<Symmetry>> {
    (0..1usize << n)
        .map(|mask| {
            (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Symmetry::Antisymmetric
                    } else {
                        Symmetry::Symmetric
                    }
                })
                .collect()
        })
        .collect()
}

#[test]
fn global_projectors_decompose_by_parity() {
    for dims in [&[2, 2][..], &[2, 2, 2], &[2, 3], &[3, 2, 2]] {
        let s = shape(dims);
        let (global_plus, global_minus) = global_projectors(&s).unwrap();
        let n = s.total_dim() * s.total_dim();
        let mut even = ComplexMatrix::zeros(n, n);
        let mut odd = ComplexMatrix::zeros(n, n);
        for pattern in sign_patterns(s.len()) {
            let minus_count = pattern
                .iter()
                .filter(|&&p| p == Symmetry::Antisymmetric)
                .count();
            let term = pattern_product(&s, &pattern).unwrap();
            if minus_count % 2 == 0 {
                even = &even + &term;
            } else {
                odd = &odd + &term;
            }
        }
        assert!(even.max_abs_diff(&global_plus) < 1e-12, "{dims:?}");
        assert!(odd.max_abs_diff(&global_minus) < 1e-12, "{dims:?}");
        assert!((&global_plus + &global_minus).max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
    }
}

#[test]
fn bipartition_sum_identities() {
    for dims in [&[2, 2][..], &[2, 2, 2], &[2, 3, 2]] {
        let s = shape(dims);
        let n_sub = s.len() as i32;
        let n = s.total_dim() * s.total_dim();
        let (global_plus, global_minus) = global_projectors(&s).unwrap();
        let all_plus = pattern_product(&s, &vec![Symmetry::Symmetric; s.len()]).unwrap();

        let mut minus_minus = ComplexMatrix::zeros(n, n);
        let mut mixed = ComplexMatrix::zeros(n, n);
        let bipartitions = s.bipartitions();
        assert_eq!(bipartitions.len(), (1usize << (s.len() - 1)) - 1);
        for (k, kbar) in &bipartitions {
            let mk = antisym_projector(&s, k).unwrap();
            let pk = sym_projector(&s, k).unwrap();
            let mkbar = antisym_projector(&s, kbar).unwrap();
            let pkbar = sym_projector(&s, kbar).unwrap();
            minus_minus = &minus_minus + &(&mk * &mkbar);
            mixed = &(&mixed + &(&mk * &pkbar)) + &(&pk * &mkbar);
        }
        let rhs1 = (&global_plus - &all_plus).scale(2f64.powi(n_sub - 2));
        let rhs2 = global_minus.scale(2f64.powi(n_sub - 1) - 1.0);
        assert!(minus_minus.max_abs_diff(&rhs1) < 1e-12, "{dims:?}");
        assert!(mixed.max_abs_diff(&rhs2) < 1e-12, "{dims:?}");
    }
}

#[test]
fn swap_trick_gives_reduced_purities() {
    for dims in [&[2, 2][..], &[2, 3], &[3, 3], &[2, 2, 2]] {
        let s = shape(dims);
        for sample in 0..5 {
            let rho = generic_state(&s, 17, sample);
            for block in nonempty_blocks(&s) {
                let w = swap_operator(&s, &block).unwrap();
                let lhs = concurrence_core::projectors::two_copy_trace(rho.matrix(), &w);
                let rhs = rho.reduced_purity(&block).unwrap();
                assert!(
                    (lhs.re - rhs).abs() < 1e-10 && lhs.im.abs() < 1e-10,
                    "{dims:?} {block:?}"
                );
            }
        }
    }
}

#[test]
fn multipartite_observable_examples() {
    // two qubits: ⟨K⟩ on Bell⊗Bell = 1
    let bell = states::bell_phi_plus();
    let m2 = multipartite_observables(bell.shape()).unwrap();
    assert!((m2.k.pure_expectation(bell.amplitudes()) - 1.0).abs() < 1e-12);

    let ghz = states::ghz(3).unwrap();
    let m3 = multipartite_observables(ghz.shape()).unwrap();
    assert!((m3.k.pure_expectation(ghz.amplitudes()) - 1.5).abs() < 1e-12);

    let mixed = concurrence_core::DensityMatrix::maximally_mixed(SystemShape::qubits(3).unwrap());
    let k = m3.k.expectation(&mixed).unwrap();
    let v = m3.v.expectation(&mixed).unwrap();
    assert!((v - (k - 2.625)).abs() < 1e-12);
    assert!((k - 1.875).abs() < 1e-12);
    assert!((v + 0.75).abs() < 1e-12);
}
