// SPDX-License-Identifier: Apache-2.0

use super::dg::attach_dg;
use super::gadget::{Builder, GadgetOutput, Probe, Promise, Sidecar, Target, WitnessMap};
use super::set_system::{solve_set_system, Mode, SetSystemInstance};
use crate::distance::Finite;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::Variant;

/// Directed OV graph: `A`, then `C` (one vertex per coordinate), then `B`,
/// with `a -> c` iff `a[c] = 1` and `c -> b` iff `b[c] = 1`.
pub fn build_ov_graph(inst: &SetSystemInstance) -> Result<Graph> {
    if inst.mode() != Mode::Ov {
        return Err(Error::input("the OV graph needs an orthogonal-vectors instance"));
    }
    let mut b = Builder::new();
    let p = Layout::add(&mut b, inst);
    p.ov_arcs(&mut b, inst);
    Ok(b.finish(false))
}

struct Layout {
    a: Vec<usize>,
    c: Vec<usize>,
    b: Vec<usize>,
}

impl Layout {
    fn add(b: &mut Builder, inst: &SetSystemInstance) -> Self {
        Layout {
            a: b.vertices(inst.list_a().len()),
            c: b.vertices(inst.universe()),
            b: b.vertices(inst.list_b().len()),
        }
    }

    fn ov_arcs(&self, b: &mut Builder, inst: &SetSystemInstance) {
        for (i, s) in inst.list_a().iter().enumerate() {
            for e in s.ones() {
                b.arc(self.a[i], self.c[e]);
            }
        }
        for (j, s) in inst.list_b().iter().enumerate() {
            for e in s.ones() {
                b.arc(self.c[e], self.b[j]);
            }
        }
    }
}

/// The instance a gadget is built from: the input, or a fixed no-instance
/// when either list is empty.
struct Prepared {
    inst: SetSystemInstance,
    answer: bool,
    original: bool,
    sizes: (usize, usize),
}

impl Prepared {
    fn new(inst: &SetSystemInstance) -> Result<Self> {
        if inst.mode() != Mode::Ov {
            return Err(Error::input("this gadget needs an orthogonal-vectors instance"));
        }
        let answer = solve_set_system(inst).answer;
        let sizes = (inst.list_a().len(), inst.list_b().len());
        if sizes.0 == 0 || sizes.1 == 0 {
            let fixed = SetSystemInstance::new(1, &[vec![0]], &[vec![0]], Mode::Ov).expect("fixed instance is valid");
            return Ok(Prepared {
                inst: fixed,
                answer,
                original: false,
                sizes,
            });
        }
        Ok(Prepared {
            inst: inst.clone(),
            answer,
            original: true,
            sizes,
        })
    }

    fn output(
        &self,
        gadget: &str,
        graph: Graph,
        target: Target,
        yes: Promise,
        no: Promise,
        is_dag: bool,
        l: &Layout,
    ) -> GadgetOutput {
        let witness_map = if self.original {
            WitnessMap {
                a: l.a.iter().map(|&v| Some(v)).collect(),
                b: l.b.iter().map(|&v| Some(v)).collect(),
            }
        } else {
            WitnessMap {
                a: vec![None; self.sizes.0],
                b: vec![None; self.sizes.1],
            }
        };
        GadgetOutput {
            graph,
            sidecar: Sidecar {
                gadget: gadget.into(),
                target,
                answer: self.answer,
                yes_value: yes,
                no_bound: no,
                probes: Vec::new(),
                anchors: Vec::new(),
                is_dag,
                witness_map,
            },
            pathwidth_witness: None,
        }
    }
}

fn min_diameter_dag(inst: &SetSystemInstance, hub_to_b_tree: bool) -> Result<GadgetOutput> {
    let p = Prepared::new(inst)?;
    let mut b = Builder::new();
    let l = Layout::add(&mut b, &p.inst);
    l.ov_arcs(&mut b, &p.inst);
    let (x, y) = (b.vertex(), b.vertex());
    let dga = attach_dg(&mut b, &l.a, 1);
    let dgb = attach_dg(&mut b, &l.b, 1);
    let dgc = attach_dg(&mut b, &l.c, 1);
    b.arc(x, y);
    for &(v, _) in &dga.nodes {
        b.arc(v, x);
    }
    for &v in &dga.extra {
        b.arc(v, y);
    }
    for &(v, _) in &dgc.nodes {
        b.arc(x, v);
        b.arc(v, y);
    }
    for &(v, _) in &dgb.nodes {
        b.arc(y, v);
    }
    if hub_to_b_tree {
        for &v in &dgb.extra {
            b.arc(x, v);
        }
    }
    let graph = b.finish(false);
    Ok(p.output(
        "min-diameter-dag",
        graph,
        Target::Diameter(Variant::Min),
        Promise::AtLeast(Finite(3)),
        Promise::Exact(Finite(2)),
        true,
        &l,
    ))
}

/// Min diameter at least 3 when an orthogonal pair exists, exactly 2 otherwise, on a DAG.
///
/// The OV graph plus DG over each of `A`, `B`, `C` and hubs `x`, `y`:
/// `x -> y`, `DG(A) -> x -> DG(C) -> y -> DG(B)`, `DG(A)∖A -> y`, and
/// `x -> DG(B)∖B`.
pub fn gadget_min_diameter_dag(inst: &SetSystemInstance) -> Result<GadgetOutput> {
    min_diameter_dag(inst, true)
}

/// Min diameter at least `2t` when an orthogonal pair exists, exactly `t+1`
/// otherwise. `t` must be even and positive.
pub fn gadget_min_diameter_weighted(inst: &SetSystemInstance, t: usize) -> Result<GadgetOutput> {
    if t < 2 || t % 2 == 1 {
        return Err(Error::input(format!("t must be even and at least 2, got {t}")));
    }
    let p = Prepared::new(inst)?;
    let (t, h) = (t as u64, t as u64 / 2);
    let mut b = Builder::new();
    let l = Layout::add(&mut b, &p.inst);
    let (x, y, z) = (b.vertex(), b.vertex(), b.vertex());
    for (i, s) in p.inst.list_a().iter().enumerate() {
        for e in s.ones() {
            b.arc_w(l.a[i], l.c[e], h);
        }
    }
    for (j, s) in p.inst.list_b().iter().enumerate() {
        for e in s.ones() {
            b.arc_w(l.c[e], l.b[j], h);
        }
    }
    for &a in &l.a {
        b.arc_w(a, x, 1);
        b.arc_w(x, a, t);
    }
    for &v in &l.b {
        b.arc_w(v, y, t);
        b.arc_w(y, v, 1);
    }
    for &c in &l.c {
        b.arc_w(c, x, 1);
        b.arc_w(y, c, 1);
        b.arc_w(c, z, h);
        b.arc_w(z, c, h);
    }
    b.arc_w(y, x, 1);
    let graph = b.finish(false);
    Ok(p.output(
        "min-diameter-weighted",
        graph,
        Target::Diameter(Variant::Min),
        Promise::AtLeast(Finite(2 * t)),
        Promise::Exact(Finite(t + 1)),
        false,
        &l,
    ))
}

fn diameter_23_graph(p: &Prepared, b: &mut Builder) -> Layout {
    let l = Layout::add(b, &p.inst);
    l.ov_arcs(b, &p.inst);
    let (x, y) = (b.vertex(), b.vertex());
    for &v in l.a.iter().chain(&l.c) {
        b.arc(x, v);
    }
    for &v in l.b.iter().chain(&l.c) {
        b.arc(y, v);
    }
    b.arc(x, y);
    l
}

/// Undirected diameter 3 when an orthogonal pair exists, 2 otherwise.
///
/// The undirected OV graph plus a hub `x` on `A ∪ C`, a hub `y` on
/// `B ∪ C`, and the edge `x – y`.
pub fn gadget_undirected_diameter_23(inst: &SetSystemInstance) -> Result<GadgetOutput> {
    let p = Prepared::new(inst)?;
    let mut b = Builder::new();
    let l = diameter_23_graph(&p, &mut b);
    Ok(p.output(
        "undirected-diameter-23",
        b.finish(true),
        Target::Diameter(Variant::Undirected),
        Promise::Exact(Finite(3)),
        Promise::Exact(Finite(2)),
        false,
        &l,
    ))
}

/// Roundtrip diameter 6 when an orthogonal pair exists, 4 otherwise: the
/// undirected 2-vs-3 gadget with every edge turned into two arcs.
pub fn gadget_roundtrip_diameter(inst: &SetSystemInstance) -> Result<GadgetOutput> {
    let p = Prepared::new(inst)?;
    let mut b = Builder::new();
    let l = diameter_23_graph(&p, &mut b);
    Ok(p.output(
        "roundtrip-diameter",
        b.finish(true).bidirected(),
        Target::Diameter(Variant::Roundtrip),
        Promise::Exact(Finite(6)),
        Promise::Exact(Finite(4)),
        false,
        &l,
    ))
}

/// Per-vertex eccentricities: `ecc(a) = 5` if `a` is orthogonal to some
/// `b`, else 3; the hub `x` always has eccentricity 4.
///
/// Undirected: `a – c` iff `a[c] = 1`, `b – c` iff `b[c] = 1`, an extra
/// coordinate `c0` adjacent to every `b`, a pendant `b'` on each `b`, a hub
/// `x` on `A`, a hub `y` on `C ∪ {c0}`, and `x – y`.
pub fn gadget_all_eccentricities(inst: &SetSystemInstance) -> Result<GadgetOutput> {
    let p = Prepared::new(inst)?;
    let mut b = Builder::new();
    let l = Layout::add(&mut b, &p.inst);
    l.ov_arcs(&mut b, &p.inst);
    let c0 = b.vertex();
    let (x, y) = (b.vertex(), b.vertex());
    for &v in &l.b {
        let pendant = b.vertex();
        b.arc(v, pendant);
        b.arc(c0, v);
    }
    for &a in &l.a {
        b.arc(x, a);
    }
    for &c in l.c.iter().chain([&c0]) {
        b.arc(y, c);
    }
    b.arc(x, y);
    let graph = b.finish(true);
    let lists = (p.inst.list_a(), p.inst.list_b());
    let probes = (0..lists.0.len())
        .map(|i| Probe {
            vertex: l.a[i],
            answer: lists.1.iter().any(|s| s.is_disjoint(&lists.0[i])),
        })
        .collect();
    let mut out = p.output(
        "all-eccentricities",
        graph,
        Target::Eccentricity(Variant::Undirected),
        Promise::Exact(Finite(5)),
        Promise::Exact(Finite(3)),
        false,
        &l,
    );
    out.sidecar.probes = probes;
    out.sidecar.anchors = vec![(x, Finite(4))];
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hardness::set_system::{all_set_systems, random_set_system};
    use crate::oracle::{all_pairs, DEFAULT_CAP};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sweep(build: &dyn Fn(&SetSystemInstance) -> Result<GadgetOutput>) {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..60 {
            let (na, nb, d) = (rng.gen_range(0..7), rng.gen_range(0..7), rng.gen_range(0..6));
            let inst = random_set_system(na, nb, d, rng.gen_range(0.3..0.9), Mode::Ov, &mut rng);
            let g = build(&inst).unwrap();
            let v = g.check(DEFAULT_CAP).unwrap();
            assert!(v.pass, "{} on {:?}: {v}", g.sidecar.gadget, inst.to_text());
        }
        for inst in all_set_systems(2, 2, 2, Mode::Ov) {
            let g = build(&inst).unwrap();
            let v = g.check(DEFAULT_CAP).unwrap();
            assert!(v.pass, "{} on {:?}: {v}", g.sidecar.gadget, inst.to_text());
        }
    }

    #[test]
    fn ov_graph_two_paths() {
        let ones = SetSystemInstance::new(2, &[vec![0, 1]], &[vec![0, 1]], Mode::Ov).unwrap();
        let m = all_pairs(&build_ov_graph(&ones).unwrap()).unwrap();
        assert_eq!(m.get(0, 3), Finite(2));
        let orth = SetSystemInstance::new(2, &[vec![0]], &[vec![1]], Mode::Ov).unwrap();
        assert!(!all_pairs(&build_ov_graph(&orth).unwrap())
            .unwrap()
            .get(0, 3)
            .is_finite());

        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..200 {
            let (na, nb, d) = (rng.gen_range(1..6), rng.gen_range(1..6), rng.gen_range(0..6));
            let inst = random_set_system(na, nb, d, 0.4, Mode::Ov, &mut rng);
            let m = all_pairs(&build_ov_graph(&inst).unwrap()).unwrap();
            for i in 0..na {
                for j in 0..nb {
                    let meets = !inst.list_a()[i].is_disjoint(&inst.list_b()[j]);
                    assert_eq!(m.get(i, na + d + j).is_finite(), meets);
                }
            }
        }
    }

    #[test]
    fn min_diameter_dag_promises() {
        sweep(&gadget_min_diameter_dag);
    }

    #[test]
    fn min_diameter_dag_needs_hub_to_b_tree() {
        let inst = SetSystemInstance::new(1, &[vec![0]], &[vec![0], vec![0]], Mode::Ov).unwrap();
        let g = min_diameter_dag(&inst, false).unwrap();
        assert!(!g.sidecar.answer);
        assert_eq!(g.check(DEFAULT_CAP).unwrap().observed, Finite(3));
    }

    #[test]
    fn min_diameter_weighted_promises() {
        for t in [2, 4, 6] {
            sweep(&|i| gadget_min_diameter_weighted(i, t));
        }
        assert!(gadget_min_diameter_weighted(
            &random_set_system(1, 1, 1, 0.5, Mode::Ov, &mut ChaCha8Rng::seed_from_u64(0)),
            3
        )
        .is_err());
    }

    #[test]
    fn diameter_23() {
        sweep(&gadget_undirected_diameter_23);
        sweep(&gadget_roundtrip_diameter);
    }

    #[test]
    fn all_eccentricities() {
        sweep(&gadget_all_eccentricities);
        let inst = SetSystemInstance::new(2, &[vec![0], vec![0, 1]], &[vec![1]], Mode::Ov).unwrap();
        let g = gadget_all_eccentricities(&inst).unwrap();
        assert_eq!(
            g.sidecar.probes.iter().map(|p| p.answer).collect::<Vec<_>>(),
            vec![true, false]
        );
    }
}
