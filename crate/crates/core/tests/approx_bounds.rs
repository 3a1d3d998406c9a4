// SPDX-License-Identifier: Apache-2.0

mod common;

use common::{brute_diameter, brute_eccentricities, brute_radius};
use ecclab_core::approx::{
    approx_min_diameter, approx_min_diameter_dag, approx_min_radius_dag, approx_source_radius, approximate_center,
    finite_min_eccentricities, CenterOutcome, Ratio,
};
use ecclab_core::generate::{random_dag, random_digraph};
use ecclab_core::{Distance, Finite, Graph, Variant};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn source_radius_never_below_truth() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut good = 0;
    for _ in 0..40 {
        let g = random_digraph(60, 240, 9, &mut rng);
        let r = approx_source_radius(&g, &mut rng).unwrap();
        let truth = brute_radius(&g, Variant::Source);
        assert!(r.estimate >= truth);
        if let Some(c) = r.witness_center {
            assert_eq!(brute_eccentricities(&g, Variant::Source)[c], r.estimate);
        }
        good += usize::from(r.within_guarantee(truth));
    }
    assert!(good >= 39, "{good}/40 within factor 2");
}

#[test]
fn directed_star() {
    let arcs: Vec<_> = (1..30).map(|v| (0, v)).collect();
    let g = Graph::directed_unit(30, &arcs).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    assert_eq!(approx_source_radius(&g, &mut rng).unwrap().estimate, Finite(1));
}

#[test]
fn min_radius_dag_within_three() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let g = random_dag(50, 150, 5, &mut rng);
        let r = approx_min_radius_dag(&g).unwrap();
        let truth = brute_radius(&g, Variant::Min);
        assert!(r.within_guarantee(truth), "estimate {} truth {truth}", r.estimate);
    }
}

#[test]
fn approximate_center_contract() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let g = random_dag(12, 20, 3, &mut rng);
        let ecc = brute_eccentricities(&g, Variant::Min);
        for r in 0..8 {
            let r = Finite(r);
            match approximate_center(&g, r).unwrap() {
                CenterOutcome::Found(c) => assert!(ecc[c] <= r.scale(3)),
                CenterOutcome::AllExceed => assert!(ecc.iter().all(|&e| e > r)),
            }
        }
    }
}

#[test]
fn min_diameter_dag_within_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..40 {
        let g = random_dag(60, 200, 7, &mut rng);
        let r = approx_min_diameter_dag(&g).unwrap();
        assert!(r.within_guarantee(brute_diameter(&g, Variant::Min)));
    }
    let path = Graph::directed_unit(10, &(0..9).map(|v| (v, v + 1)).collect::<Vec<_>>()).unwrap();
    let e = approx_min_diameter_dag(&path).unwrap().estimate;
    assert!(e >= Finite(5) && e <= Finite(9));
    let two = Graph::directed_unit(2, &[]).unwrap();
    assert_eq!(approx_min_diameter_dag(&two).unwrap().estimate, Distance::Infinite);
    let cyc = Graph::directed_unit(2, &[(0, 1), (1, 0)]).unwrap();
    assert!(approx_min_diameter_dag(&cyc).is_err());
}

#[test]
fn min_diameter_general() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let half = Ratio { num: 1, den: 2 };
    let mut good = 0;
    for _ in 0..30 {
        let g = random_digraph(50, 80, 1, &mut rng);
        let r = approx_min_diameter(&g, half, &mut rng).unwrap();
        let truth = brute_diameter(&g, Variant::Min);
        assert!(r.estimate <= truth);
        good += usize::from(r.within_guarantee(truth));
    }
    assert!(good >= 29);
    let cycle = Graph::directed_unit(9, &(0..9).map(|v| (v, (v + 1) % 9)).collect::<Vec<_>>()).unwrap();
    let r = approx_min_diameter(&cycle, half, &mut rng).unwrap();
    assert!(r.within_guarantee(Finite(4)));
    let weighted = Graph::new(2, [(0, 1, 3)], false).unwrap();
    assert!(approx_min_diameter(&weighted, half, &mut rng).is_err());
}

#[test]
fn finite_min_ecc_matches_brute() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..200 {
        let g = random_digraph(20, 25, 1, &mut rng);
        let want: Vec<bool> = brute_eccentricities(&g, Variant::Min)
            .iter()
            .map(|e| e.is_finite())
            .collect();
        assert_eq!(finite_min_eccentricities(&g), want);
    }
}
