// SPDX-License-Identifier: Apache-2.0

mod common;

use common::brute_eccentricities;
use ecclab_core::generate::{random_orientation, reweight};
use ecclab_core::treewidth::{
    generate_partial_ktree, min_degree_decomposition, range_max_build, range_max_query, three_layer_brute,
    three_layer_farthest, tw_eccentricities, RangePoint, ThreeLayerInstance, TreeDecomposition,
};
use ecclab_core::{Distance, Finite, Variant};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn matches_oracle_on_partial_ktrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for k in 1..=3 {
        for _ in 0..6 {
            let n = rng.gen_range(k + 2..150);
            let (g, td) = generate_partial_ktree(n, k, 0.7, &mut rng).unwrap();
            td.validate(&g).unwrap();
            assert!(td.width() <= k);
            let w = reweight(&g, 9, &mut rng);
            let r = tw_eccentricities(&w, &td, Variant::Undirected).unwrap();
            assert_eq!(r.ecc, brute_eccentricities(&w, Variant::Undirected));
            let d = random_orientation(&g, 9, &mut rng);
            for v in [Variant::Source, Variant::Max, Variant::Min, Variant::Roundtrip] {
                let r = tw_eccentricities(&d, &td, v).unwrap();
                assert_eq!(r.ecc, brute_eccentricities(&d, v), "k {k} n {n} {v:?}");
            }
        }
    }
}

#[test]
fn heuristic_decomposition_is_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let (g, _) = generate_partial_ktree(80, 3, 0.8, &mut rng).unwrap();
    let td = min_degree_decomposition(&g);
    td.validate(&g).unwrap();
    let r = tw_eccentricities(&g, &td, Variant::Undirected).unwrap();
    assert_eq!(r.ecc, brute_eccentricities(&g, Variant::Undirected));
}

#[test]
fn pace_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let (g, td) = generate_partial_ktree(40, 2, 0.5, &mut rng).unwrap();
    let text = td.to_pace(g.n());
    let back = TreeDecomposition::parse_pace(&text).unwrap();
    assert_eq!(back.to_pace(g.n()), text);
    back.validate(&g).unwrap();
}

#[test]
fn range_max_matches_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for d in 1..=4 {
        for _ in 0..25 {
            let n = rng.gen_range(0..200);
            let points: Vec<RangePoint> = (0..n)
                .map(|i| RangePoint {
                    coords: (0..d).map(|_| rng.gen_range(-20..20)).collect(),
                    value: rng.gen_range(-50..50),
                    payload: i,
                })
                .collect();
            let idx = range_max_build(d, points.clone()).unwrap();
            for _ in 0..20 {
                let lo: Vec<i64> = (0..d).map(|_| rng.gen_range(-25..20)).collect();
                let hi: Vec<i64> = lo.iter().map(|&l| l + rng.gen_range(0..30)).collect();
                let want = points
                    .iter()
                    .filter(|p| (0..d).all(|j| lo[j] <= p.coords[j] && p.coords[j] <= hi[j]))
                    .map(|p| (p.value, std::cmp::Reverse(p.payload)))
                    .max()
                    .map(|(v, p)| (v, p.0));
                assert_eq!(range_max_query(&idx, &lo, &hi), want);
            }
        }
    }
}

#[test]
fn three_layer_small_exhaustive() {
    let vals = [Finite(0), Finite(1), Finite(2), Distance::Infinite];
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..3000 {
        let (a, b, c) = (rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3));
        let dab: Vec<Vec<Distance>> = (0..a)
            .map(|_| (0..b).map(|_| vals[rng.gen_range(0..4)]).collect())
            .collect();
        let dbc: Vec<Vec<Distance>> = (0..b)
            .map(|_| (0..c).map(|_| vals[rng.gen_range(0..4)]).collect())
            .collect();
        let inst = ThreeLayerInstance::new(&dab, &dbc).unwrap();
        assert_eq!(three_layer_farthest(&inst), three_layer_brute(&inst));
    }
}
