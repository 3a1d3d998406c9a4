// SPDX-License-Identifier: Apache-2.0

use crate::graph::Graph;
use crate::paths::condense_scc;

/// For each vertex, whether its min-eccentricity is finite. Linear time.
///
/// A vertex qualifies iff, in the condensation, its component is reached by
/// every earlier component and reaches every later one.
pub fn finite_min_eccentricities(g: &Graph) -> Vec<bool> {
    if g.is_undirected() {
        // Min-distance is plain distance: finite iff the graph is connected.
        let (comp, dag) = condense_scc(&g.bidirected());
        return vec![dag.n() <= 1; comp.len()];
    }
    let (comp, dag) = condense_scc(g);
    let k = dag.n();
    let reached = reached_by_all_before(k, |i| dag.out_arcs(i).iter().map(|&(j, _)| j).min());
    // Mirror the order: position i becomes k-1-i and arcs flip.
    let reaches = reached_by_all_before(k, |i| {
        let orig = k - 1 - i;
        dag.in_arcs(orig).iter().map(|&(j, _)| k - 1 - j).min()
    });
    comp.iter().map(|&c| reached[c] && reaches[k - 1 - c]).collect()
}

/// On a DAG numbered topologically, which nodes are reached by all earlier nodes.
/// `first(i)` is the smallest out-neighbour of `i`.
fn reached_by_all_before(k: usize, first: impl Fn(usize) -> Option<usize>) -> Vec<bool> {
    let mut hits = vec![0usize; k];
    let mut firsts = vec![None; k];
    for (i, f) in firsts.iter_mut().enumerate() {
        *f = first(i);
        if let Some(j) = *f {
            hits[j] += 1;
        }
    }
    // count = number of earlier nodes with no arc landing at or before the current one.
    let mut out = vec![false; k];
    let mut count = 0usize;
    for i in 0..k {
        if i > 0 {
            count += 1;
        }
        count -= hits[i];
        out[i] = count == 0;
    }
    out
}
