// SPDX-License-Identifier: Apache-2.0

//! Single-source traversals and structural preprocessing.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use rand::Rng;

use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::graph::{Direction, Graph};

pub(crate) const INF: u64 = u64::MAX;

/// Distances from (or, for `Backward`, to) a single source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceVector {
    pub source: usize,
    pub direction: Direction,
    pub dist: Vec<Distance>,
}

impl DistanceVector {
    /// Largest entry; the eccentricity of `source` in the traversal direction.
    pub fn max(&self) -> Distance {
        self.dist.iter().copied().max().unwrap_or(Distance::ZERO)
    }
}

/// Exact distances from `source` along `direction`. BFS on unit weights, Dijkstra otherwise.
pub fn shortest_paths(g: &Graph, source: usize, direction: Direction) -> Result<DistanceVector> {
    check_vertex(g, source)?;
    let raw = sssp_raw(g, source, direction);
    Ok(DistanceVector {
        source,
        direction,
        dist: raw.into_iter().map(Distance::from_raw).collect(),
    })
}

pub(crate) fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::input(format!("vertex {v} out of range (n = {})", g.n())));
    }
    Ok(())
}

/// Raw distances with `INF` for unreachable vertices.
pub(crate) fn sssp_raw(g: &Graph, source: usize, direction: Direction) -> Vec<u64> {
    let mut dist = vec![INF; g.n()];
    sssp_into(g, source, direction, &mut dist);
    dist
}

/// Fills `dist` (length n) with raw distances from `source`.
pub(crate) fn sssp_into(g: &Graph, source: usize, direction: Direction, dist: &mut [u64]) {
    dist.fill(INF);
    dist[source] = 0;
    if g.is_unit_weight() {
        let mut queue = VecDeque::with_capacity(g.n());
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u] + 1;
            for &(v, _) in g.arcs(u, direction) {
                if dist[v] == INF {
                    dist[v] = du;
                    queue.push_back(v);
                }
            }
        }
        return;
    }
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &(v, w) in g.arcs(u, direction) {
            let nd = d.saturating_add(w);
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Reverse((nd, v)));
            }
        }
    }
}

/// The `k` closest vertices to `source` with exact distances, ordered by
/// (distance, vertex id). Returns fewer when fewer are reachable.
pub fn truncated_shortest_paths(
    g: &Graph,
    source: usize,
    k: usize,
    direction: Direction,
) -> Result<Vec<(usize, Distance)>> {
    check_vertex(g, source)?;
    if k == 0 || k > g.n() {
        return Err(Error::input(format!("k = {k} must lie in [1, {}]", g.n())));
    }
    let mut dist: std::collections::HashMap<usize, u64> = std::collections::HashMap::new();
    let mut settled: Vec<(u64, usize)> = Vec::with_capacity(k);
    let mut heap = BinaryHeap::new();
    dist.insert(source, 0);
    heap.push(Reverse((0u64, source)));
    // Settle everything up to the k-th smallest distance so that id tie-breaks
    // among equal distances are exact.
    let mut bound = INF;
    while let Some(Reverse((d, u))) = heap.pop() {
        if d > dist[&u] {
            continue;
        }
        if d > bound {
            break;
        }
        settled.push((d, u));
        if settled.len() == k {
            bound = d;
        }
        for &(v, w) in g.arcs(u, direction) {
            let nd = d.saturating_add(w);
            let entry = dist.entry(v).or_insert(INF);
            if nd < *entry {
                *entry = nd;
                heap.push(Reverse((nd, v)));
            }
        }
    }
    settled.sort_unstable();
    settled.truncate(k);
    Ok(settled.into_iter().map(|(d, v)| (v, Distance::Finite(d))).collect())
}

/// Kahn's algorithm, always taking the smallest available vertex id.
pub fn topological_order(g: &Graph) -> Result<Vec<usize>> {
    if g.is_undirected() {
        if g.m() == 0 {
            return Ok((0..g.n()).collect());
        }
        return Err(Error::Cyclic);
    }
    let n = g.n();
    let mut indeg: Vec<usize> = (0..n).map(|v| g.in_arcs(v).len()).collect();
    let mut ready: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(u)) = ready.pop() {
        order.push(u);
        for &(v, _) in g.out_arcs(u) {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.push(Reverse(v));
            }
        }
    }
    if order.len() != n {
        return Err(Error::Cyclic);
    }
    Ok(order)
}

/// Strongly connected components.
///
/// Component ids are numbered in a topological order of the condensation, so
/// every condensation arc goes from a smaller id to a larger one. The
/// condensation has unit weights and no parallel arcs.
pub fn condense_scc(g: &Graph) -> (Vec<usize>, Graph) {
    let n = g.n();
    let comp = tarjan(g);
    let count = comp.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for &(v, _) in g.out_arcs(u) {
            if comp[u] != comp[v] {
                arcs.push((comp[u], comp[v]));
            }
        }
    }
    arcs.sort_unstable();
    arcs.dedup();
    let dag = Graph::new(count, arcs.into_iter().map(|(a, b)| (a, b, 1)), false)
        .expect("condensation arcs are in range and loop-free");
    (comp, dag)
}

// Iterative Tarjan; returns ids in topological order of the condensation.
fn tarjan(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![usize::MAX; n];
    let mut next_index = 0;
    let mut found = 0;
    let mut call: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        call.push((root, 0));
        while let Some(&(u, pos)) = call.last() {
            if pos == 0 {
                index[u] = next_index;
                low[u] = next_index;
                next_index += 1;
                stack.push(u);
                on_stack[u] = true;
            }
            let arcs = g.out_arcs(u);
            if pos < arcs.len() {
                let v = arcs[pos].0;
                call.last_mut().expect("frame").1 = pos + 1;
                if index[v] == usize::MAX {
                    call.push((v, 0));
                } else if on_stack[v] {
                    low[u] = low[u].min(index[v]);
                }
                continue;
            }
            call.pop();
            if low[u] == index[u] {
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp[w] = found;
                    if w == u {
                        break;
                    }
                }
                found += 1;
            }
            if let Some(&(p, _)) = call.last() {
                low[p] = low[p].min(low[u]);
            }
        }
    }
    // Tarjan emits components in reverse topological order.
    comp.iter().map(|&c| found - 1 - c).collect()
}

/// Uniform sample of `size` distinct vertices from `0..n`, sorted ascending.
pub fn sample_vertex_set<R: Rng + ?Sized>(n: usize, size: usize, rng: &mut R) -> Result<Vec<usize>> {
    if size > n {
        return Err(Error::input(format!("sample size {size} exceeds n = {n}")));
    }
    let mut s = rand::seq::index::sample(rng, n, size).into_vec();
    s.sort_unstable();
    Ok(s)
}
