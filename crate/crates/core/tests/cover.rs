mod common;

use std::f64::consts::PI;

use proptest::prelude::*;
use spectral_transfer::cover::{
    check_transfer, cover_graph, gram_identity_defect, gram_matrix, interval_cover_builder, interval_neumann_value,
    NeumannProfile, TwoFoldCover,
};
use spectral_transfer::linalg::{eigenvalues, DEFAULT_TOLERANCE};

/// `λ_k` of a circle of length `length`: `(2π⌈k/2⌉ / L)²`.
fn circle_eigenvalues(length: f64, k_max: usize) -> Vec<f64> {
    (0..=k_max).map(|k| (2.0 * PI * k.div_ceil(2) as f64 / length).powi(2)).collect()
}

fn random_cover(seed: u64) -> TwoFoldCover {
    let mut rng = common::rng(seed);
    let m = 3 + (seed % 14) as usize;
    let length = 0.5 + (seed % 7) as f64;
    if seed % 2 == 0 {
        common::random_circle_cover(&mut rng, m, length)
    } else {
        common::random_interval_cover(&mut rng, m, length)
    }
}

#[test]
fn gram_identity_on_random_covers() {
    for seed in 0..200 {
        let c = random_cover(seed);
        assert!(c.is_exact(), "seed {seed}");
        assert!(gram_identity_defect(&c).unwrap() <= 1e-9, "seed {seed}");
    }
}

#[test]
fn transfer_on_equal_circle_covers() {
    for n in [4, 8, 16, 32] {
        for length in [1.0, 2.0 * PI, 10.0] {
            let c = common::equal_circle_cover(n, length);
            let s = 2.0 * length / n as f64;
            let profile = NeumannProfile::uniform(n, interval_neumann_value(s)).unwrap();
            let r = check_transfer(&c, &circle_eigenvalues(length, 10), &profile, 10).unwrap();
            assert!(r.all_hold, "n={n} L={length}: {r:?}");
            assert_eq!(r.rows.len(), 10.min(n - 1));
            // The bound does not depend on L: it is scale free.
            assert!((r.eta - PI * PI / (s * s)).abs() <= 1e-12 * r.eta);
        }
    }
}

#[test]
fn equal_cover_intersections() {
    let c = common::equal_circle_cover(6, 3.0);
    for i in 0..6 {
        assert!((c.intersection(i, (i + 1) % 6) - 0.5).abs() < 1e-15);
        assert_eq!(c.intersection(i, (i + 3) % 6), 0.0);
    }
}

#[test]
fn json_round_trip_preserves_the_cover() {
    let c = random_cover(11);
    let back = TwoFoldCover::from_json(&c.to_json()).unwrap();
    assert_eq!(back.measures(), c.measures());
    assert_eq!(back.intersections(), c.intersections());
}

#[test]
fn overlapping_arcs_are_rejected() {
    // Three arcs covering part of the circle three times.
    assert!(interval_cover_builder(1.0, &[(0.0, 0.4), (0.1, 0.4), (0.2, 0.4)], true).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn degree_equals_measure(seed in any::<u64>()) {
        let c = random_cover(seed);
        let g = cover_graph(&c);
        for (v, mu) in c.measures().iter().enumerate() {
            prop_assert!((g.degree(v) - mu).abs() <= 1e-9 * mu);
        }
    }

    #[test]
    fn gram_matrix_is_positive_semidefinite(seed in any::<u64>()) {
        let c = random_cover(seed);
        let s = eigenvalues(&gram_matrix(&c), DEFAULT_TOLERANCE).unwrap();
        prop_assert!(s.values[0] >= -1e-9, "{}", s.values[0]);
    }

    #[test]
    fn gram_identity_holds(seed in any::<u64>()) {
        prop_assert!(gram_identity_defect(&random_cover(seed)).unwrap() <= 1e-9);
    }
}
