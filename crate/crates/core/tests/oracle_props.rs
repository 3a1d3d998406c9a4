// SPDX-License-Identifier: Apache-2.0

mod common;

use common::brute_eccentricities;
use ecclab_core::generate::random_digraph;
use ecclab_core::{exact_eccentricities, exact_median, Distance, Finite, Graph, Variant};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn digraph() -> impl Strategy<Value = Graph> {
    (1usize..12).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n, 1u64..10), 0..3 * n).prop_map(move |arcs| {
            let arcs: Vec<_> = arcs.into_iter().filter(|(u, v, _)| u != v).collect();
            Graph::new(n, arcs, false).unwrap()
        })
    })
}

fn ungraph() -> impl Strategy<Value = Graph> {
    (1usize..12).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n, 1u64..10), 0..2 * n).prop_map(move |edges| {
            let edges: Vec<_> = edges.into_iter().filter(|(u, v, _)| u != v).collect();
            Graph::new(n, edges, true).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn matches_floyd_warshall(g in digraph()) {
        for v in [Variant::Source, Variant::Max, Variant::Min, Variant::Roundtrip] {
            prop_assert_eq!(exact_eccentricities(&g, v).unwrap().ecc, brute_eccentricities(&g, v));
        }
    }

    #[test]
    fn variant_order(g in digraph()) {
        let ecc = |v| exact_eccentricities(&g, v).unwrap();
        let (mn, mx, rt) = (ecc(Variant::Min), ecc(Variant::Max), ecc(Variant::Roundtrip));
        for i in 0..g.n() {
            prop_assert!(mn.ecc[i] <= mx.ecc[i] && mx.ecc[i] <= rt.ecc[i]);
        }
        for r in [&mn, &mx, &rt] {
            prop_assert!(r.radius <= r.diameter);
        }
        for r in [&mx, &rt] {
            prop_assert!(r.diameter <= r.radius + r.radius);
        }
    }

    #[test]
    fn undirected_variants_agree(g in ungraph()) {
        let base = exact_eccentricities(&g, Variant::Undirected).unwrap();
        for v in [Variant::Source, Variant::Max, Variant::Min] {
            prop_assert_eq!(&exact_eccentricities(&g, v).unwrap().ecc, &base.ecc);
        }
        let rt = exact_eccentricities(&g, Variant::Roundtrip).unwrap();
        for i in 0..g.n() {
            prop_assert_eq!(rt.ecc[i], base.ecc[i] + base.ecc[i]);
        }
        prop_assert!(base.diameter <= base.radius + base.radius);
    }

    #[test]
    fn graph_text_round_trip(g in digraph()) {
        let text = g.to_text();
        let back = Graph::parse(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
        prop_assert_eq!(back.edges(), g.edges());
    }
}

#[test]
fn hand_examples() {
    let path = Graph::directed_unit(3, &[(0, 1), (1, 2)]).unwrap();
    let r = exact_eccentricities(&path, Variant::Source).unwrap();
    assert_eq!(r.ecc, vec![Finite(2), Distance::Infinite, Distance::Infinite]);
    assert_eq!((r.radius, r.center), (Finite(2), 0));
    assert_eq!(
        exact_eccentricities(&path, Variant::Roundtrip).unwrap().radius,
        Distance::Infinite
    );

    let single = Graph::directed_unit(1, &[]).unwrap();
    assert_eq!(
        exact_eccentricities(&single, Variant::Source).unwrap().radius,
        Finite(0)
    );

    let star = Graph::undirected_unit(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    assert_eq!(exact_median(&star).unwrap(), (0, Finite(4)));
    let p3 = Graph::undirected_unit(3, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(exact_median(&p3).unwrap(), (1, Finite(2)));
    assert!(exact_eccentricities(&path, Variant::Undirected).is_err());
}

#[test]
fn larger_random_digraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..20 {
        let g = random_digraph(40, 120, 9, &mut rng);
        for v in [Variant::Source, Variant::Max, Variant::Min, Variant::Roundtrip] {
            assert_eq!(exact_eccentricities(&g, v).unwrap().ecc, brute_eccentricities(&g, v));
        }
    }
}
