// SPDX-License-Identifier: Apache-2.0

//! Random test and benchmark instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Weights drawn uniformly from `1..=max_weight`; `max_weight = 1` gives unit weights.
fn weight<R: Rng + ?Sized>(rng: &mut R, max_weight: u64) -> u64 {
    if max_weight <= 1 {
        1
    } else {
        rng.gen_range(1..=max_weight)
    }
}

/// Digraph with `m` arcs drawn uniformly among non-loop ordered pairs
/// (parallel arcs possible). Needs `n ≥ 2` when `m > 0`.
pub fn random_digraph<R: Rng + ?Sized>(n: usize, m: usize, max_weight: u64, rng: &mut R) -> Graph {
    let mut arcs = Vec::with_capacity(m);
    if n >= 2 {
        while arcs.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                arcs.push((u, v, weight(rng, max_weight)));
            }
        }
    }
    Graph::new(n, arcs, false).expect("generated arcs are valid")
}

/// DAG with `m` arcs consistent with a hidden random vertex order.
pub fn random_dag<R: Rng + ?Sized>(n: usize, m: usize, max_weight: u64, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut arcs = Vec::with_capacity(m);
    if n >= 2 {
        while arcs.len() < m {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            if i != j {
                let (a, b) = (i.min(j), i.max(j));
                arcs.push((perm[a], perm[b], weight(rng, max_weight)));
            }
        }
    }
    Graph::new(n, arcs, false).expect("generated arcs are valid")
}

/// `random_digraph` plus a directed cycle through all vertices in random
/// order, so the result is strongly connected.
pub fn random_strong_digraph<R: Rng + ?Sized>(n: usize, m: usize, max_weight: u64, rng: &mut R) -> Graph {
    let base = random_digraph(n, m, max_weight, rng);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut arcs: Vec<_> = base.edges().iter().map(|e| (e.source, e.target, e.weight)).collect();
    if n >= 2 {
        for i in 0..n {
            arcs.push((order[i], order[(i + 1) % n], weight(rng, max_weight)));
        }
    }
    Graph::new(n, arcs, false).expect("generated arcs are valid")
}

/// `random_dag` plus a path along the hidden order, so every pair is
/// comparable and min-distances are finite.
pub fn random_path_dag<R: Rng + ?Sized>(n: usize, m: usize, max_weight: u64, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut arcs = Vec::with_capacity(m + n);
    for i in 1..n {
        arcs.push((perm[i - 1], perm[i], weight(rng, max_weight)));
    }
    if n >= 2 {
        for _ in 0..m {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            if i != j {
                arcs.push((perm[i.min(j)], perm[i.max(j)], weight(rng, max_weight)));
            }
        }
    }
    Graph::new(n, arcs, false).expect("generated arcs are valid")
}

/// Connected undirected graph: a random spanning tree plus `extra` random edges.
pub fn random_connected<R: Rng + ?Sized>(n: usize, extra: usize, max_weight: u64, rng: &mut R) -> Graph {
    let mut edges = Vec::with_capacity(n + extra);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v, weight(rng, max_weight)));
    }
    if n >= 2 {
        for _ in 0..extra {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                edges.push((u, v, weight(rng, max_weight)));
            }
        }
    }
    Graph::new(n, edges, true).expect("generated edges are valid")
}

/// Directed version of an undirected graph: each edge keeps both directions
/// with probability 1/2, otherwise one random direction. Weights are redrawn
/// per arc.
pub fn random_orientation<R: Rng + ?Sized>(g: &Graph, max_weight: u64, rng: &mut R) -> Graph {
    let mut arcs = Vec::with_capacity(2 * g.m());
    for e in g.edges() {
        if rng.gen_bool(0.5) {
            arcs.push((e.source, e.target, weight(rng, max_weight)));
            arcs.push((e.target, e.source, weight(rng, max_weight)));
        } else if rng.gen_bool(0.5) {
            arcs.push((e.source, e.target, weight(rng, max_weight)));
        } else {
            arcs.push((e.target, e.source, weight(rng, max_weight)));
        }
    }
    Graph::new(g.n(), arcs, false).expect("orientation of a valid graph")
}

/// Undirected graph with the same vertex set and freshly drawn weights.
pub fn reweight<R: Rng + ?Sized>(g: &Graph, max_weight: u64, rng: &mut R) -> Graph {
    let edges: Vec<_> = g
        .edges()
        .iter()
        .map(|e| (e.source, e.target, weight(rng, max_weight)))
        .collect();
    Graph::new(g.n(), edges, g.is_undirected()).expect("reweighting a valid graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{exact_eccentricities, Variant};
    use crate::paths::topological_order;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_digraph(30, 90, 9, &mut rng);
        assert_eq!((g.n(), g.m()), (30, 90));
        assert!(g.max_weight() <= 9);
        let d = random_dag(30, 90, 1, &mut rng);
        assert!(topological_order(&d).is_ok());
        assert!(d.is_unit_weight());
        let c = random_connected(20, 5, 3, &mut rng);
        assert!(c.is_undirected() && c.m() >= 19);
        let o = random_orientation(&c, 4, &mut rng);
        assert!(!o.is_undirected() && o.m() >= c.m());
        let s = random_strong_digraph(40, 20, 3, &mut rng);
        assert!(exact_eccentricities(&s, Variant::Roundtrip)
            .unwrap()
            .diameter
            .is_finite());
        let p = random_path_dag(40, 20, 3, &mut rng);
        assert!(topological_order(&p).is_ok());
        assert!(exact_eccentricities(&p, Variant::Min).unwrap().diameter.is_finite());
    }
}
