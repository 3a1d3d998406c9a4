// SPDX-License-Identifier: Apache-2.0

use ecclab_core::hardness::*;
use ecclab_core::oracle::all_pairs;
use ecclab_core::{exact_eccentricities, topological_order, Finite, Graph, Variant};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CAP: usize = 20_000;

type Builders = Vec<(&'static str, Box<dyn Fn(&SetSystemInstance) -> GadgetOutput>)>;

fn hse_builders() -> Builders {
    vec![
        ("radius-23", Box::new(|i| gadget_radius_23(i).unwrap())),
        ("source-t2", Box::new(|i| gadget_source_radius(i, 2).unwrap())),
        ("source-t4", Box::new(|i| gadget_source_radius(i, 4).unwrap())),
        ("max-t3", Box::new(|i| gadget_max_radius(i, 3).unwrap())),
        ("roundtrip", Box::new(|i| gadget_roundtrip_radius(i).unwrap())),
        ("min-dag-t3", Box::new(|i| gadget_min_radius_dag(i, 3).unwrap())),
        ("median", Box::new(|i| gadget_median(i).unwrap())),
    ]
}

fn ov_builders() -> Builders {
    vec![
        ("min-diam-dag", Box::new(|i| gadget_min_diameter_dag(i).unwrap())),
        ("min-diam-w4", Box::new(|i| gadget_min_diameter_weighted(i, 4).unwrap())),
        ("diam-23", Box::new(|i| gadget_undirected_diameter_23(i).unwrap())),
        ("roundtrip-diam", Box::new(|i| gadget_roundtrip_diameter(i).unwrap())),
        ("all-ecc", Box::new(|i| gadget_all_eccentricities(i).unwrap())),
    ]
}

fn check_all(inst: &SetSystemInstance) {
    let builders = match inst.mode() {
        Mode::Hse => hse_builders(),
        Mode::Ov => ov_builders(),
    };
    let answer = solve_set_system(inst).answer;
    for (name, build) in builders {
        let out = build(inst);
        assert_eq!(out.sidecar.answer, answer, "{name}");
        let v = out.check(CAP).unwrap();
        assert!(v.pass, "{name} on\n{}{v}", inst.to_text());
        if let Some(td) = &out.pathwidth_witness {
            td.validate(&out.graph).unwrap();
        }
        if out.sidecar.is_dag {
            topological_order(&out.graph).unwrap();
        }
    }
}

#[test]
fn random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    for _ in 0..15 {
        check_all(&random_set_system(5, 4, 4, 0.45, Mode::Hse, &mut rng));
        check_all(&random_set_system(5, 5, 4, 0.5, Mode::Ov, &mut rng));
    }
}

#[test]
fn tiny_exhaustive() {
    for mode in [Mode::Hse, Mode::Ov] {
        for inst in all_set_systems(2, 1, 2, mode) {
            check_all(&inst);
        }
    }
}

#[test]
fn radius_23_size_and_width() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let inst = random_set_system(6, 6, 5, 0.4, Mode::Hse, &mut rng);
    let out = gadget_radius_23(&inst).unwrap();
    let td = out.pathwidth_witness.expect("radius gadget has a witness");
    td.validate(&out.graph).unwrap();
    assert!(td.width() <= inst.universe() + 3);
    assert!(out.graph.n() <= 6 + 6 + 5 + 4 + 36 * 5);
}

#[test]
fn dg_pairs_up_to_64() {
    for size in [2, 4, 8, 16, 32, 64] {
        for t in 1..=3 {
            let f = build_dg(size, t).unwrap();
            topological_order(&f.graph).unwrap();
            let m = all_pairs(&f.graph).unwrap();
            for u in 0..f.graph.n() {
                for v in 0..u {
                    let d = Variant::Min.pair(m.get(u, v), m.get(v, u));
                    if f.related(u, v) {
                        assert!(d <= Finite(t as u64));
                    } else {
                        assert_eq!(d, Finite(t as u64 + 1));
                    }
                }
            }
        }
    }
}

#[test]
fn hash_reduction_is_one_sided() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..25 {
        let inst = random_set_system(6, 6, 5, 0.5, Mode::Ov, &mut rng);
        let g = gadget_undirected_diameter_23(&inst).unwrap().graph;
        let truth = exact_eccentricities(&g, Variant::Undirected).unwrap().diameter;
        let got = reduce_decision23_to_set_system(&g, Decision23::Diameter, 3, DEFAULT_ROUNDS, &mut rng).unwrap();
        if truth == Finite(2) {
            assert_eq!(got, 2);
        }
    }
}

#[test]
fn text_and_json_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for mode in [Mode::Hse, Mode::Ov] {
        let inst = random_set_system(4, 3, 5, 0.3, mode, &mut rng);
        let text = inst.to_text();
        let back = SetSystemInstance::parse(&text).unwrap();
        assert_eq!(back, inst);
        assert_eq!(back.to_text(), text);
    }
    let out = gadget_roundtrip_radius(&random_set_system(3, 3, 3, 0.5, Mode::Hse, &mut rng)).unwrap();
    let json = out.sidecar.to_json();
    let side = Sidecar::from_json(&json).unwrap();
    assert_eq!(side, out.sidecar);
    assert_eq!(side.to_json(), json);
    let g = Graph::parse(&out.graph.to_text()).unwrap();
    assert!(verify_gadget(&g, &side, CAP).unwrap().pass);
}

#[test]
fn tampered_sidecar_fails() {
    let inst = SetSystemInstance::new(2, &[vec![0], vec![1]], &[vec![0, 1]], Mode::Hse).unwrap();
    let mut out = gadget_roundtrip_radius(&inst).unwrap();
    let mut side = out.sidecar.clone();
    if side.answer {
        side.yes_value = Promise::Exact(Finite(5));
    } else {
        side.no_bound = Promise::AtLeast(Finite(1000));
    }
    out.sidecar = side;
    assert!(!out.check(CAP).unwrap().pass);
}
