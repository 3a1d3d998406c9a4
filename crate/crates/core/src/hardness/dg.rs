// SPDX-License-Identifier: Apache-2.0

use super::gadget::Builder;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertices of one DG_t structure inside a larger gadget.
#[derive(Debug, Clone)]
pub(crate) struct DgParts {
    /// Every vertex with its node in the underlying complete binary tree
    /// (heap numbering, root 1).
    pub nodes: Vec<(usize, usize)>,
    /// Vertices that are not among the given leaves.
    pub extra: Vec<usize>,
}

/// Adds DG_t over `leaves` (in this left-to-right order) to `b`.
///
/// The leaf count is padded to a power of two with fresh dummy leaves. Every
/// internal tree node becomes a directed path of `t` copies. A node reaches
/// each ancestor it sits left of, and is reached from each ancestor it sits
/// right of.
pub(crate) fn attach_dg(b: &mut Builder, leaves: &[usize], t: usize) -> DgParts {
    assert!(t >= 1);
    if leaves.is_empty() {
        return DgParts {
            nodes: Vec::new(),
            extra: Vec::new(),
        };
    }
    let width = leaves.len().next_power_of_two();
    let mut copies: Vec<Vec<usize>> = vec![Vec::new(); 2 * width];
    let mut extra = Vec::new();
    for k in 1..width {
        copies[k] = b.vertices(t);
        b.path(&copies[k]);
        extra.extend_from_slice(&copies[k]);
    }
    for i in 0..width {
        copies[width + i] = match leaves.get(i) {
            Some(&v) => vec![v],
            None => {
                let v = b.vertex();
                extra.push(v);
                vec![v]
            }
        };
    }
    for x in 2..2 * width {
        let mut child = x;
        while child > 1 {
            let p = child / 2;
            if child % 2 == 0 {
                for &c in &copies[x] {
                    b.arc(c, copies[p][0]);
                }
            } else {
                let last = *copies[p].last().expect("internal nodes have copies");
                for &c in &copies[x] {
                    b.arc(last, c);
                }
            }
            child = p;
        }
    }
    let nodes = (1..2 * width)
        .flat_map(|k| copies[k].iter().map(move |&v| (v, k)))
        .collect();
    DgParts { nodes, extra }
}

/// Standalone DG_t over `size` leaves; leaf `i` is vertex `i`.
#[derive(Debug, Clone)]
pub struct DgFragment {
    pub graph: Graph,
    pub size: usize,
    pub t: usize,
    tree_node: Vec<usize>,
}

impl DgFragment {
    /// Heap index of the tree node `v` is a copy of.
    pub fn tree_node(&self, v: usize) -> usize {
        self.tree_node[v]
    }

    /// Whether one of the two vertices' tree nodes is an ancestor of, or
    /// equal to, the other's.
    pub fn related(&self, u: usize, v: usize) -> bool {
        let (mut p, mut q) = (self.tree_node[u], self.tree_node[v]);
        let depth = |x: usize| usize::BITS - x.leading_zeros();
        while depth(p) > depth(q) {
            p /= 2;
        }
        while depth(q) > depth(p) {
            q /= 2;
        }
        p == q
    }
}

pub fn build_dg(size: usize, t: usize) -> Result<DgFragment> {
    if t == 0 {
        return Err(Error::input("DG_t needs t >= 1"));
    }
    let mut b = Builder::new();
    let leaves = b.vertices(size);
    let parts = attach_dg(&mut b, &leaves, t);
    let graph = b.finish(false);
    let mut tree_node = vec![0; graph.n()];
    for (v, k) in parts.nodes {
        tree_node[v] = k;
    }
    Ok(DgFragment {
        graph,
        size,
        t,
        tree_node,
    })
}
