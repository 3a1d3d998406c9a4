// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use super::decomposition::intersect;
use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex set `S` whose only vertices with arcs to the rest are its portals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PortalSplit {
    /// Sorted.
    pub side_s: Vec<usize>,
    /// Sorted subset of `side_s`.
    pub portals: Vec<usize>,
    /// Sorted; `V ∖ side_s`.
    pub complement: Vec<usize>,
}

impl PortalSplit {
    /// Checks that portals lie in `S` and that every arc crossing the split
    /// touches a portal. Returns a description of the first violation.
    pub fn check(&self, g: &Graph, width: usize) -> std::result::Result<(), String> {
        if self.portals.len() > width {
            return Err(format!("{} portals exceed width {width}", self.portals.len()));
        }
        let mut in_s = vec![false; g.n()];
        for &v in &self.side_s {
            in_s[v] = true;
        }
        if self.side_s.len() + self.complement.len() != g.n() || self.complement.iter().any(|&v| in_s[v]) {
            return Err("sides do not partition the vertices".into());
        }
        if self.portals.iter().any(|&p| !in_s[p]) {
            return Err("portal outside S".into());
        }
        for e in g.edges() {
            if in_s[e.source] != in_s[e.target] {
                let inner = if in_s[e.source] { e.source } else { e.target };
                if self.portals.binary_search(&inner).is_err() {
                    return Err(format!("edge ({}, {}) leaves S at a non-portal", e.source, e.target));
                }
            }
        }
        Ok(())
    }

    /// `n/(k+1) ≤ |S| ≤ nk/(k+1)`.
    pub fn is_balanced(&self, width: usize) -> bool {
        let n = self.side_s.len() + self.complement.len();
        let s = self.side_s.len();
        let k = width.max(1);
        s * (k + 1) >= n && s * (k + 1) <= n * k
    }
}

/// Splits along the decomposition tree: a bag `X_i` and a group of its
/// neighbouring branches that share one separator `σ = X_i ∩ X_j`. The
/// vertices exclusive to those branches form the complement; `S` keeps the
/// rest, so every portal lies in `σ`. The most balanced such split is chosen.
pub fn find_portal_split(g: &Graph, td: &TreeDecomposition) -> Result<PortalSplit> {
    td.validate(g)?;
    let width = td.width();
    if g.n() <= width + 1 {
        return Err(Error::input(format!(
            "need more than width + 1 = {} vertices, got {}",
            width + 1,
            g.n()
        )));
    }
    Ok(split_unchecked(g, &td.reduce()))
}

/// Splits a valid, reduced decomposition with at least two bags.
pub(crate) fn split_unchecked(g: &Graph, td: &TreeDecomposition) -> PortalSplit {
    let n = g.n();
    let nb = td.bags.len();
    assert!(nb >= 2, "a split needs at least two bags");
    let adj = td.adjacency();

    // Root at bag 0; `parent`, DFS order, and per-vertex top bag.
    let mut parent = vec![usize::MAX; nb];
    let mut order = Vec::with_capacity(nb);
    let mut stack = vec![0usize];
    parent[0] = 0;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut depth = vec![0usize; nb];
    for &x in &order[1..] {
        depth[x] = depth[parent[x]] + 1;
    }
    let mut top = vec![usize::MAX; n];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if top[v] == usize::MAX || depth[i] < depth[top[v]] {
                top[v] = i;
            }
        }
    }
    let mut below = vec![0usize; nb];
    for &t in &top {
        below[t] += 1;
    }
    for &x in order.iter().rev() {
        if x != 0 {
            below[parent[x]] += below[x];
        }
    }

    // (score, bag, separator, chosen neighbour bags)
    let mut best: Option<(usize, usize, Vec<usize>, Vec<usize>)> = None;
    for i in 0..nb {
        let mut groups: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for &j in &adj[i] {
            let sep = intersect(&td.bags[i], &td.bags[j]);
            let size = if parent[j] == i {
                below[j]
            } else {
                n - below[i] - sep.len()
            };
            groups.entry(sep).or_default().push((size, j));
        }
        for (sep, mut branches) in groups {
            branches.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let mut outside = 0;
            for t in 0..branches.len() {
                outside += branches[t].0;
                if outside == 0 || n - outside <= sep.len() {
                    continue;
                }
                let score = (n - outside).max(outside + sep.len());
                if best.as_ref().is_none_or(|b| score < b.0) {
                    let chosen = branches[..=t].iter().map(|&(_, j)| j).collect();
                    best = Some((score, i, sep.clone(), chosen));
                }
            }
        }
    }
    let (_, i, _, chosen) = best.expect("a reduced decomposition with two bags has a split");

    // Collect vertices exclusive to the chosen branches.
    let mut in_bag_i = vec![false; n];
    for &v in &td.bags[i] {
        in_bag_i[v] = true;
    }
    let mut outside = vec![false; n];
    let mut seen = vec![false; nb];
    seen[i] = true;
    let mut stack = chosen;
    for &j in &stack {
        seen[j] = true;
    }
    while let Some(x) = stack.pop() {
        for &v in &td.bags[x] {
            if !in_bag_i[v] {
                outside[v] = true;
            }
        }
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    let side_s: Vec<usize> = (0..n).filter(|&v| !outside[v]).collect();
    let complement: Vec<usize> = (0..n).filter(|&v| outside[v]).collect();
    let portals: Vec<usize> = side_s
        .iter()
        .copied()
        .filter(|&v| g.out_arcs(v).iter().chain(g.in_arcs(v)).any(|&(u, _)| outside[u]))
        .collect();
    PortalSplit {
        side_s,
        portals,
        complement,
    }
}
