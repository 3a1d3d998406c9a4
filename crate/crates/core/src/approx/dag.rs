// SPDX-License-Identifier: Apache-2.0

use crate::error::Result;
use crate::graph::{Direction, Graph};
use crate::paths::{topological_order, INF};

/// A DAG relabelled so that every arc goes from a smaller to a larger id.
#[derive(Clone, Debug)]
pub struct TopoDag {
    /// The relabelled graph.
    pub graph: Graph,
    /// `order[i]` is the original id of position `i`.
    pub order: Vec<usize>,
}

impl TopoDag {
    /// Fails with `Error::Cyclic` on graphs with a directed cycle.
    pub fn new(g: &Graph) -> Result<Self> {
        let order = topological_order(g)?;
        let graph = g.induced(&order);
        Ok(TopoDag { graph, order })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Distances between `s` and every position in `[lo, hi]` using only arcs
    /// inside that interval. `Forward` gives `d(s → v)`, `Backward` gives
    /// `d(v → s)`. Index `i` of the result is position `lo + i`.
    pub fn interval_dp(&self, s: usize, dir: Direction, lo: usize, hi: usize) -> Vec<u64> {
        debug_assert!(lo <= s && s <= hi && hi < self.n());
        let mut dist = vec![INF; hi - lo + 1];
        dist[s - lo] = 0;
        match dir {
            Direction::Forward => {
                for v in s + 1..=hi {
                    let mut best = INF;
                    for &(u, w) in self.graph.in_arcs(v) {
                        if u >= s && dist[u - lo] != INF {
                            best = best.min(dist[u - lo].saturating_add(w));
                        }
                    }
                    dist[v - lo] = best;
                }
            }
            Direction::Backward => {
                for v in (lo..s).rev() {
                    let mut best = INF;
                    for &(u, w) in self.graph.out_arcs(v) {
                        if u <= s && dist[u - lo] != INF {
                            best = best.min(dist[u - lo].saturating_add(w));
                        }
                    }
                    dist[v - lo] = best;
                }
            }
        }
        dist
    }

    /// Min-eccentricity of position `s` over the whole DAG.
    pub fn min_eccentricity(&self, s: usize) -> u64 {
        let n = self.n();
        let fwd = self.interval_dp(s, Direction::Forward, 0, n - 1);
        let bwd = self.interval_dp(s, Direction::Backward, 0, n - 1);
        (0..n).map(|v| fwd[v].min(bwd[v])).max().unwrap_or(0)
    }
}
