mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use spectral_transfer::cover::cover_laplacian;
use spectral_transfer::embedding::{
    cone_construction, euler_genus, family_generator, genus_bound_evaluate, star_cover, trace_faces, Family,
    RotationSystem,
};
use spectral_transfer::laplacian::normalized_laplacian;

fn family_suite() -> Vec<(String, RotationSystem)> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for size in [f.min_size().max(3), 5, 8] {
            out.push((format!("{f}/{size}"), family_generator(f, size).unwrap()));
        }
    }
    out
}

fn check_cone(r: &RotationSystem, label: &str) {
    let e = cone_construction(r);
    let inv = e.check_invariants();
    assert!(inv.hold(), "{label}: {inv:?}");
    assert_eq!(e.coned_genus(), euler_genus(r).unwrap() as i64, "{label}");
    let cover = star_cover(&e);
    assert!(cover.exactness_defect() <= 1e-12, "{label}");
    let diff = cover_laplacian(&cover)
        .unwrap()
        .max_abs_diff(&normalized_laplacian(r.graph()).unwrap());
    assert!(diff <= 1e-12, "{label}: {diff}");
}

#[test]
fn families_have_their_genus() {
    for (label, r) in family_suite() {
        let f: Family = label.split('/').next().unwrap().parse().unwrap();
        assert_eq!(euler_genus(&r).unwrap(), f.genus(), "{label}");
    }
}

#[test]
fn cone_invariants_on_families() {
    for (label, r) in family_suite() {
        check_cone(&r, &label);
    }
}

#[test]
fn cone_invariants_on_random_rotation_systems() {
    let mut rng = common::rng(2);
    for trial in 0..100 {
        let n = rng.gen_range(2..=30);
        let extra = rng.gen_range(0..=2 * n);
        let r = common::random_rotation_system(&mut rng, n, extra);
        check_cone(&r, &format!("trial {trial}"));
    }
}

#[test]
fn cycle_ratios_decay_with_size() {
    let small = genus_bound_evaluate(&family_generator(Family::Cycle, 50).unwrap(), 10).unwrap();
    let large = genus_bound_evaluate(&family_generator(Family::Cycle, 200).unwrap(), 10).unwrap();
    assert_eq!(large.genus, 0);
    assert!(large.sup_ratio < small.sup_ratio);
}

fn relabel(r: &RotationSystem, perm: &[usize], rng: &mut rand_chacha::ChaCha8Rng) -> RotationSystem {
    let mut orders = vec![Vec::new(); r.vertex_count()];
    for v in 0..r.vertex_count() {
        let mut o: Vec<usize> = r.neighbor_order(v).iter().map(|&u| perm[u]).collect();
        let shift = rng.gen_range(0..o.len().max(1));
        o.rotate_left(shift);
        orders[perm[v]] = o;
    }
    RotationSystem::from_neighbor_orders(&orders).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn darts_are_conserved(n in 2usize..25, extra in 0usize..40, seed in any::<u64>()) {
        let r = common::random_rotation_system(&mut common::rng(seed), n, extra);
        let total: usize = trace_faces(&r).iter().map(Vec::len).sum();
        prop_assert_eq!(total, 2 * r.edge_count());
    }

    #[test]
    fn genus_is_invariant_under_relabeling(n in 2usize..25, extra in 0usize..40, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let r = common::random_rotation_system(&mut rng, n, extra);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let s = relabel(&r, &perm, &mut rng);
        prop_assert_eq!(euler_genus(&r).unwrap(), euler_genus(&s).unwrap());
        prop_assert_eq!(trace_faces(&r).len(), trace_faces(&s).len());
    }

    #[test]
    fn rotation_json_round_trip(n in 2usize..15, extra in 0usize..20, seed in any::<u64>()) {
        let r = common::random_rotation_system(&mut common::rng(seed), n, extra);
        let back = RotationSystem::from_json(&r.to_json()).unwrap();
        for v in 0..n {
            prop_assert_eq!(back.neighbor_order(v), r.neighbor_order(v));
        }
    }
}
