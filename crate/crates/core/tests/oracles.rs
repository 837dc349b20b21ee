mod common;

use common::*;
use proptest::prelude::*;
use quadric_topology::feasibility::{face_nonempty, face_point};
use quadric_topology::{dual_complex, Configuration, IndexSet, Rational, ValidationReport};
use rand::Rng;

fn witness(cfg: &Configuration) -> Option<IndexSet> {
    match cfg.validate() {
        ValidationReport::Ok => None,
        ValidationReport::Violation { witness } => Some(witness),
    }
}

#[test]
fn validation_matches_brute_force_on_raw_configurations() {
    let mut rng = rng(11);
    for _ in 0..150 {
        let k = rng.gen_range(1..=3);
        let n = rng.gen_range(k + 1..=7);
        let cfg = random_raw_config(&mut rng, k, n);
        assert_eq!(witness(&cfg), first_violation_brute(&cfg), "{cfg}");
    }
}

#[test]
fn dual_complex_matches_brute_force() {
    let mut rng = rng(12);
    for trial in 0..60 {
        let k = 2 + trial % 2;
        let n = rng.gen_range(k + 2..=7);
        let cfg = random_config(&mut rng, k, n, trial % 5 != 0);
        let faces: Vec<IndexSet> = dual_complex(&cfg).faces().to_vec();
        assert_eq!(faces, dual_faces_brute(&cfg), "{cfg}");
    }
}

#[test]
fn face_points_are_feasible() {
    let mut rng = rng(13);
    for _ in 0..40 {
        let cfg = random_config(&mut rng, 2, 6, true);
        for &face in dual_complex(&cfg).faces() {
            let r = face_point(&cfg, face).expect("face has a point");
            let total: Rational = r.iter().cloned().sum();
            assert_eq!(total, q(1, 1));
            for i in 0..cfg.n() {
                assert!(r[i] >= q(0, 1));
                if face.contains(i) {
                    assert_eq!(r[i], q(0, 1));
                }
            }
            for row in 0..cfg.k() {
                let s: Rational = (0..cfg.n()).map(|i| r[i].clone() * cfg.lambda(i)[row].clone()).sum();
                assert_eq!(s, q(0, 1));
            }
        }
    }
}

#[test]
fn validity_witness_examples() {
    let antipodal = Configuration::from_integers(2, &[vec![1, 1], vec![0, 1], vec![-1, -1], vec![1, -3]]).unwrap();
    assert_eq!(witness(&antipodal), Some([0, 2].into_iter().collect()));
    let zero = Configuration::from_integers(2, &[vec![0, 0], vec![1, 0], vec![-1, 1]]).unwrap();
    assert_eq!(witness(&zero), Some(IndexSet::singleton(0)));
    // {1,2} precedes {2} lexicographically.
    let later_zero = Configuration::from_integers(2, &[vec![1, 0], vec![0, 0], vec![-1, 1]]).unwrap();
    assert_eq!(witness(&later_zero), Some([0, 1].into_iter().collect()));
    assert_eq!(witness(&triangle()), None);
}

fn config_strategy() -> impl Strategy<Value = (u64, usize, usize)> {
    (any::<u64>(), 2usize..=3, 0usize..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn validity_is_invariant_under_permutation_and_linear_maps((seed, k, extra) in config_strategy()) {
        let mut rng = rng(seed);
        let n = k + 2 + extra;
        let cfg = random_raw_config(&mut rng, k, n);
        let valid = witness(&cfg).is_none();

        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        let permuted = Configuration::new(k, order.iter().map(|&i| cfg.lambda(i).to_vec()).collect()).unwrap();
        prop_assert_eq!(witness(&permuted).is_none(), valid);

        // A triangular map with nonzero diagonal is invertible.
        let a: Vec<Vec<Rational>> = (0..k)
            .map(|r| (0..k).map(|c| match c.cmp(&r) {
                std::cmp::Ordering::Less => q(rng.gen_range(-3..=3), 1),
                std::cmp::Ordering::Equal => q(if rng.gen_bool(0.5) { 1 } else { -2 }, rng.gen_range(1..=3)),
                std::cmp::Ordering::Greater => q(0, 1),
            }).collect())
            .collect();
        let mapped = Configuration::new(
            k,
            (0..n).map(|i| (0..k).map(|r| (0..k).map(|c| a[r][c].clone() * cfg.lambda(i)[c].clone()).sum()).collect()).collect(),
        ).unwrap();
        prop_assert_eq!(witness(&mapped), witness(&cfg));
    }

    #[test]
    fn faces_are_closed_downward((seed, k, extra) in config_strategy()) {
        let mut rng = rng(seed);
        let cfg = random_config(&mut rng, k, k + 2 + extra, true);
        let n = cfg.n();
        for bits in 0u64..1 << n {
            let l = IndexSet::from_bits(bits);
            if face_nonempty(&cfg, l) {
                for v in l.iter() {
                    prop_assert!(face_nonempty(&cfg, l.remove(v)));
                }
            }
        }
    }

    #[test]
    fn duplicate_then_delete_is_the_identity((seed, k, extra) in config_strategy(), i in 0usize..5) {
        let mut rng = rng(seed);
        let cfg = random_config(&mut rng, k, k + 2 + extra, false);
        let i = i % cfg.n();
        let dup = cfg.duplicate_coordinate(i).unwrap();
        prop_assert_eq!(dup.n(), cfg.n() + 1);
        prop_assert!(dup.twins(i).any(|t| t == i + 1));
        let back = dup.delete_coordinate(i + 1).unwrap();
        prop_assert_eq!(back.lambdas(), cfg.lambdas());
        prop_assert!(witness(&dup).is_none());
    }
}
