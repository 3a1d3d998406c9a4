// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use super::dg::attach_dg;
use super::gadget::{Builder, GadgetOutput, Promise, Sidecar, Target, WitnessMap};
use super::hse::normalize_hse;
use super::set_system::{solve_set_system, Mode, SetSystemInstance};
use crate::distance::Finite;
use crate::error::{Error, Result};
use crate::oracle::Variant;
use crate::treewidth::TreeDecomposition;

/// Default stretch parameter: `max(2, |U|)`.
pub fn default_t(inst: &SetSystemInstance) -> usize {
    inst.universe().max(2)
}

struct Prepared {
    inst: SetSystemInstance,
    answer: bool,
    origin: Option<(Vec<usize>, Vec<usize>)>,
    sizes: (usize, usize),
}

impl Prepared {
    fn new(inst: &SetSystemInstance) -> Result<Self> {
        if inst.mode() != Mode::Hse {
            return Err(Error::input("this gadget needs a hitting-set instance"));
        }
        let norm = normalize_hse(inst);
        Ok(Prepared {
            answer: solve_set_system(inst).answer,
            inst: norm.instance,
            origin: norm.origin,
            sizes: (inst.list_a().len(), inst.list_b().len()),
        })
    }

    fn na(&self) -> usize {
        self.inst.list_a().len()
    }

    fn nb(&self) -> usize {
        self.inst.list_b().len()
    }

    fn d(&self) -> usize {
        self.inst.universe()
    }

    fn in_a(&self, i: usize, e: usize) -> bool {
        self.inst.list_a()[i].contains(e)
    }

    fn b_members(&self, j: usize) -> Vec<usize> {
        self.inst.b_elements(j)
    }

    fn witness_map(&self, a_vertex: &[usize], b_vertex: &[usize]) -> WitnessMap {
        let mut map = WitnessMap {
            a: vec![None; self.sizes.0],
            b: vec![None; self.sizes.1],
        };
        if let Some((ao, bo)) = &self.origin {
            for (i, &o) in ao.iter().enumerate() {
                map.a[o] = Some(a_vertex[i]);
            }
            for (j, &o) in bo.iter().enumerate() {
                map.b[o] = Some(b_vertex[j]);
            }
        }
        map
    }

    #[allow(clippy::too_many_arguments)]
    fn output(
        &self,
        gadget: &str,
        graph: crate::graph::Graph,
        target: Target,
        yes_value: Promise,
        no_bound: Promise,
        is_dag: bool,
        witness_map: WitnessMap,
        pathwidth_witness: Option<TreeDecomposition>,
    ) -> GadgetOutput {
        GadgetOutput {
            graph,
            sidecar: Sidecar {
                gadget: gadget.into(),
                target,
                answer: self.answer,
                yes_value,
                no_bound,
                probes: Vec::new(),
                anchors: Vec::new(),
                is_dag,
                witness_map,
            },
            pathwidth_witness,
        }
    }
}

fn check_t(t: usize) -> Result<()> {
    if t < 2 {
        return Err(Error::input(format!("stretch t must be at least 2, got {t}")));
    }
    Ok(())
}

/// Undirected radius 2 (yes) versus at least 3 (no).
///
/// The HSE-graph plus hubs `x` (adjacent to `A` and `U`) and `y` (adjacent
/// to `A`), a pendant `z` on `y`, and a connector `d` adjacent to `A` that
/// carries `max(|A|,|B|)·|U|` pendant dummies.
pub fn gadget_radius_23(inst: &SetSystemInstance) -> Result<GadgetOutput> {
    let p = Prepared::new(inst)?;
    let mut b = Builder::new();
    let a = b.vertices(p.na());
    let u = b.vertices(p.d());
    let bs = b.vertices(p.nb());
    let (x, y, z, d) = (b.vertex(), b.vertex(), b.vertex(), b.vertex());
    let dummies = b.vertices(p.na().max(p.nb()) * p.d());
    for i in 0..p.na() {
        for e in 0..p.d() {
            if p.in_a(i, e) {
                b.arc(a[i], u[e]);
            }
        }
        b.arc(a[i], x);
        b.arc(a[i], y);
        b.arc(d, a[i]);
    }
    for j in 0..p.nb() {
        for e in p.b_members(j) {
            b.arc(u[e], bs[j]);
        }
    }
    for &ue in &u {
        b.arc(ue, x);
    }
    b.arc(y, z);
    for &w in &dummies {
        b.arc(d, w);
    }
    let graph = b.finish(true);

    let mut bags: Vec<Vec<usize>> = dummies.iter().map(|&w| vec![d, w]).collect();
    let hub: Vec<usize> = u.iter().copied().chain([x, y]).collect();
    bags.push(hub.iter().copied().chain([d]).collect());
    bags.extend(a.iter().map(|&v| hub.iter().copied().chain([d, v]).collect::<Vec<_>>()));
    bags.extend(bs.iter().map(|&v| hub.iter().copied().chain([v]).collect::<Vec<_>>()));
    bags.push(vec![y, z]);
    let tree = (1..bags.len()).map(|i| (i - 1, i)).collect();
    let td = TreeDecomposition::new(bags, tree);

    let map = p.witness_map(&a, &bs);
    Ok(p.output(
        "radius-23",
        graph,
        Target::Radius(Variant::Undirected),
        Promise::Exact(Finite(2)),
        Promise::AtLeast(Finite(3)),
        false,
        map,
        Some(td),
    ))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum BackEdges {
    None,
    /// Arcs to `x` from `U`, `B` and the `B`-tails only.
    #[cfg_attr(not(test), allow(dead_code))]
    Listed,
    /// Also from the `A`-heads.
    WithHeads,
}

fn source_like(inst: &SetSystemInstance, t: usize, back: BackEdges) -> Result<GadgetOutput> {
    check_t(t)?;
    let p = Prepared::new(inst)?;
    let mut b = Builder::new();
    let a = b.vertices(p.na());
    let u = b.vertices(p.d());
    let bs = b.vertices(p.nb());
    let x = b.vertex();
    for i in 0..p.na() {
        for e in 0..p.d() {
            if p.in_a(i, e) {
                b.arc(a[i], u[e]);
            }
        }
    }
    for j in 0..p.nb() {
        for e in p.b_members(j) {
            b.arc(u[e], bs[j]);
        }
    }
    let mut into_x: Vec<usize> = Vec::new();
    for &bj in &bs {
        let mut tail = vec![bj];
        tail.extend(b.vertices(t - 1));
        b.path(&tail);
        into_x.extend_from_slice(&tail);
    }
    let mut heads = Vec::new();
    for &ai in &a {
        let mut head = b.vertices(t - 2);
        heads.extend_from_slice(&head);
        head.push(ai);
        b.path(&head);
        b.arc(ai, x);
        b.arc(x, head[0]);
    }
    if back != BackEdges::None {
        into_x.extend_from_slice(&u);
        if back == BackEdges::WithHeads {
            into_x.extend_from_slice(&heads);
        }
        for v in into_x {
            b.arc(v, x);
        }
    }
    let graph = b.finish(false);
    let map = p.witness_map(&a, &bs);
    let (name, variant) = if back == BackEdges::None {
        ("source-radius", Variant::Source)
    } else {
        ("max-radius", Variant::Max)
    };
    Ok(p.output(
        name,
        graph,
        Target::Radius(variant),
        Promise::Exact(Finite(t as u64 + 1)),
        Promise::AtLeast(Finite(2 * t as u64)),
        false,
        map,
        None,
    ))
}

/// Source radius `t+1` (yes) versus at least `2t` (no).
///
/// The HSE-graph oriented `A -> U -> B`, a tail of `t-1` vertices after
/// each `b`, a head of `t-2` vertices before each `a`, and a hub `x` with
/// `a -> x` and `x -> head(a)`.
pub fn gadget_source_radius(inst: &SetSystemInstance, t: usize) -> Result<GadgetOutput> {
    source_like(inst, t, BackEdges::None)
}

/// Max radius `t+1` (yes) versus at least `2t` (no).
///
/// The source-radius gadget plus an arc into `x` from every vertex outside
/// `A` and `x`, head vertices included.
pub fn gadget_max_radius(inst: &SetSystemInstance, t: usize) -> Result<GadgetOutput> {
    source_like(inst, t, BackEdges::WithHeads)
}

/// How the long side of each 4-cycle is realized in the roundtrip gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RoundtripStyle {
    /// A single arc of weight 3.
    #[default]
    Weighted,
    /// A path of three unit arcs through two fresh vertices.
    Subdivided,
}

/// Roundtrip radius 4 (yes) versus at least 8 (no).
pub fn gadget_roundtrip_radius(inst: &SetSystemInstance) -> Result<GadgetOutput> {
    gadget_roundtrip_radius_with(inst, RoundtripStyle::Weighted)
}

/// Two copies of a gadget `H` glued along `A`. In each copy, `a` and the
/// copies `u_C`, `u_D` of an element lie on 4-cycles: `a -> u_C` short and
/// `u_C -> a` long when `u ∈ a`, reversed otherwise, and the mirror image
/// for `u_D`. Each `b` gets `u_C -> b -> u_D` for `u ∈ b`.
pub fn gadget_roundtrip_radius_with(inst: &SetSystemInstance, style: RoundtripStyle) -> Result<GadgetOutput> {
    let p = Prepared::new(inst)?;
    let mut b = Builder::new();
    let a = b.vertices(p.na());
    let long = |b: &mut Builder, from: usize, to: usize| match style {
        RoundtripStyle::Weighted => b.arc_w(from, to, 3),
        RoundtripStyle::Subdivided => {
            let (p1, p2) = (b.vertex(), b.vertex());
            b.path(&[from, p1, p2, to]);
        }
    };
    let mut b_first = Vec::new();
    let mut hub_bag = Vec::new();
    let mut b_bags = Vec::new();
    for copy in 0..2 {
        let c = b.vertices(p.d());
        let dd = b.vertices(p.d());
        let bs = b.vertices(p.nb());
        for i in 0..p.na() {
            for e in 0..p.d() {
                if p.in_a(i, e) {
                    b.arc(a[i], c[e]);
                    long(&mut b, c[e], a[i]);
                    b.arc(dd[e], a[i]);
                    long(&mut b, a[i], dd[e]);
                } else {
                    long(&mut b, a[i], c[e]);
                    b.arc(c[e], a[i]);
                    b.arc(a[i], dd[e]);
                    long(&mut b, dd[e], a[i]);
                }
            }
        }
        for j in 0..p.nb() {
            for e in p.b_members(j) {
                b.arc(c[e], bs[j]);
                b.arc(bs[j], dd[e]);
            }
        }
        hub_bag.extend(c.iter().chain(&dd).copied());
        b_bags.extend_from_slice(&bs);
        if copy == 0 {
            b_first = bs;
        }
    }
    let graph = b.finish(false);
    let td = (style == RoundtripStyle::Weighted).then(|| {
        let bags: Vec<Vec<usize>> = a
            .iter()
            .chain(&b_bags)
            .map(|&v| hub_bag.iter().copied().chain([v]).collect())
            .collect();
        let tree = (1..bags.len()).map(|i| (i - 1, i)).collect();
        TreeDecomposition::new(bags, tree)
    });
    let map = p.witness_map(&a, &b_first);
    Ok(p.output(
        "roundtrip-radius",
        graph,
        Target::Radius(Variant::Roundtrip),
        Promise::Exact(Finite(4)),
        Promise::AtLeast(Finite(8)),
        false,
        map,
        td,
    ))
}

/// Min radius `t+1` (yes) versus at least `2t` (no) on a DAG.
///
/// The HSE-graph oriented `A -> U -> B` with `B`-tails of `t-1` vertices,
/// two copies of DG_t over `A` sharing `A`, a path `x_1 .. x_t` with
/// `a -> x_1` and `x_t -> u`, and a sink `y` with `a -> y`.
pub fn gadget_min_radius_dag(inst: &SetSystemInstance, t: usize) -> Result<GadgetOutput> {
    check_t(t)?;
    let p = Prepared::new(inst)?;
    let mut b = Builder::new();
    let a = b.vertices(p.na());
    let u = b.vertices(p.d());
    let bs = b.vertices(p.nb());
    for i in 0..p.na() {
        for e in 0..p.d() {
            if p.in_a(i, e) {
                b.arc(a[i], u[e]);
            }
        }
    }
    for j in 0..p.nb() {
        for e in p.b_members(j) {
            b.arc(u[e], bs[j]);
        }
        let mut tail = vec![bs[j]];
        tail.extend(b.vertices(t - 1));
        b.path(&tail);
    }
    attach_dg(&mut b, &a, t);
    attach_dg(&mut b, &a, t);
    let xs = b.vertices(t);
    b.path(&xs);
    let y = b.vertex();
    for &ai in &a {
        b.arc(ai, xs[0]);
        b.arc(ai, y);
    }
    for &ue in &u {
        b.arc(xs[t - 1], ue);
    }
    let graph = b.finish(false);
    let map = p.witness_map(&a, &bs);
    Ok(p.output(
        "min-radius-dag",
        graph,
        Target::Radius(Variant::Min),
        Promise::Exact(Finite(t as u64 + 1)),
        Promise::AtLeast(Finite(2 * t as u64)),
        true,
        map,
        None,
    ))
}

/// Median sum `M*` (yes) versus at least `M* + 2` (no).
///
/// The undirected HSE-graph plus a complement copy `U_N` (`a – u_N` iff
/// `u ∉ a`) and three hubs, each with `n' = max(|A|,|B|)·|U|` pendants:
/// `x` on `A`, `y` on `B`, `z` on `U_N`. With `|A| = |B| = n`,
/// `M* = 9n' + 4n + 4|U| + 4`.
pub fn gadget_median(inst: &SetSystemInstance) -> Result<GadgetOutput> {
    let p = Prepared::new(inst)?;
    let (na, nb, d) = (p.na(), p.nb(), p.d());
    let n_pend = na.max(nb) * d;
    let mut b = Builder::new();
    let a = b.vertices(na);
    let u = b.vertices(d);
    let bs = b.vertices(nb);
    let un = b.vertices(d);
    for i in 0..na {
        for e in 0..d {
            b.arc(a[i], if p.in_a(i, e) { u[e] } else { un[e] });
        }
    }
    for j in 0..nb {
        for e in p.b_members(j) {
            b.arc(u[e], bs[j]);
        }
    }
    for group in [&a, &bs, &un] {
        let hub = b.vertex();
        for &v in group.iter() {
            b.arc(hub, v);
        }
        for w in b.vertices(n_pend) {
            b.arc(hub, w);
        }
    }
    let graph = b.finish(true);
    let m_star = (9 * n_pend + 2 * (na - 1) + 2 * nb + 4 * d + 6) as u64;
    let map = p.witness_map(&a, &bs);
    Ok(p.output(
        "median",
        graph,
        Target::Median,
        Promise::Exact(Finite(m_star)),
        Promise::AtLeast(Finite(m_star + 2)),
        false,
        map,
        None,
    ))
}
