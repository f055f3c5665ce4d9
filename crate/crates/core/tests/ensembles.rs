mod support;

use concurrence_core::ensembles::{random_mixed_with_purity, simulate_batch, solve_mixing_weight};
use concurrence_core::linalg::{stream_rng, DensityMatrix};
use concurrence_core::{EnsembleSpec, Error};
use support::shape;

#[test]
fn mixing_weight_for_nine_dimensions() {
    let p = solve_mixing_weight(9, 0.98).unwrap();
    assert!((p - 0.988686).abs() < 5e-7);
}

#[test]
fn batch_offsets_match_purity() {
    for (dims, mu, want) in [
        (&[3usize, 3][..], 0.98, 0.04),
        (&[3, 3], 0.88, 0.24),
        (&[3, 3], 0.78, 0.44),
        (&[2, 2, 2], 0.98, 0.06),
        (&[2, 2, 2], 0.88, 0.36),
        (&[2, 2, 2], 0.78, 0.66),
    ] {
        let spec = EnsembleSpec::new(shape(dims), mu, 50, 3).unwrap();
        for row in simulate_batch(&spec).unwrap() {
            assert!(
                (row.offset - want).abs() < 1e-10,
                "{dims:?} μ={mu}: {}",
                row.offset
            );
            assert!((row.purity - mu).abs() < 1e-10);
            assert!(row.lower <= row.upper);
        }
    }
}

#[test]
fn unit_purity_collapses_bounds() {
    let spec = EnsembleSpec::new(shape(&[3, 3]), 1.0, 100, 11).unwrap();
    for row in simulate_batch(&spec).unwrap() {
        assert!((row.upper - row.lower).abs() < 1e-10);
    }
}

#[test]
fn thousand_samples_hit_target_and_are_physical() {
    let s = shape(&[3, 3]);
    let mu = 0.98;
    for i in 0..1000 {
        let rho = random_mixed_with_purity(&s, mu, &mut stream_rng(5, i)).unwrap();
        assert!((rho.purity() - mu).abs() < 1e-10, "sample {i}");
        DensityMatrix::new(s.clone(), rho.matrix().clone()).unwrap();
    }
}

#[test]
fn two_qubit_batches_carry_wootters() {
    let spec = EnsembleSpec::new(shape(&[2, 2]), 0.9, 200, 1).unwrap();
    for row in simulate_batch(&spec).unwrap() {
        let c2 = row.wootters_c_sq.unwrap();
        assert!(row.lower <= c2 + 1e-9 && c2 <= row.upper + 1e-9);
    }
    let spec = EnsembleSpec::new(shape(&[2, 3]), 0.9, 5, 1).unwrap();
    assert!(simulate_batch(&spec)
        .unwrap()
        .iter()
        .all(|r| r.wootters_c_sq.is_none()));
}

#[test]
fn batches_are_reproducible() {
    let spec = EnsembleSpec::new(shape(&[2, 3]), 0.8, 40, 77).unwrap();
    assert_eq!(
        simulate_batch(&spec).unwrap(),
        simulate_batch(&spec).unwrap()
    );
    let other = EnsembleSpec::new(shape(&[2, 3]), 0.8, 40, 78).unwrap();
    assert_ne!(
        simulate_batch(&spec).unwrap(),
        simulate_batch(&other).unwrap()
    );
}

#[test]
fn invalid_specs() {
    assert!(matches!(
        EnsembleSpec::new(shape(&[3, 3]), 0.1, 10, 0),
        Err(Error::PurityOutOfRange { .. })
    ));
    assert!(EnsembleSpec::new(shape(&[3, 3]), 1.2, 10, 0).is_err());
    assert!(EnsembleSpec::new(shape(&[3, 3]), 0.5, 0, 0).is_err());
    assert!(EnsembleSpec::new(shape(&[4]), 0.5, 10, 0).is_err());
}
