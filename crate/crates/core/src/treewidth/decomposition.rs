// SPDX-License-Identifier: Apache-2.0

//! Tree decompositions and the PACE `.td` text format.
//!
//! In `.td` files bag ids and vertex ids are 1-indexed; in memory both are
//! 0-indexed.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Bags of vertices arranged in a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Each bag is sorted and duplicate-free.
    pub bags: Vec<Vec<usize>>,
    /// Undirected tree edges between bag ids.
    pub tree: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Normalizes bags (sorted, deduplicated).
    pub fn new(bags: Vec<Vec<usize>>, tree: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        TreeDecomposition { bags, tree }
    }

    /// A single bag holding `0..n`.
    pub fn trivial(n: usize) -> Self {
        TreeDecomposition {
            bags: vec![(0..n).collect()],
            tree: Vec::new(),
        }
    }

    /// Largest bag size minus one (0 for an empty decomposition).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Checks the three decomposition axioms for `g` and that the bag graph is a tree.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let nb = self.bags.len();
        if nb == 0 {
            return if n == 0 {
                Ok(())
            } else {
                Err(Error::Decomposition("no bags".into()))
            };
        }
        if self.tree.len() != nb - 1 {
            return Err(Error::Decomposition(format!(
                "{} bags need {} tree edges, found {}",
                nb,
                nb - 1,
                self.tree.len()
            )));
        }
        for &(a, b) in &self.tree {
            if a >= nb || b >= nb || a == b {
                return Err(Error::Decomposition(format!("bad tree edge ({a}, {b})")));
            }
        }
        let adj = self.adjacency();
        let mut seen = vec![false; nb];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Decomposition("bag tree is disconnected".into()));
        }

        let mut bag_count = vec![0usize; n];
        let mut bags_of: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, bag) in self.bags.iter().enumerate() {
            for w in bag.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::Decomposition(format!("bag {i} is not sorted")));
                }
            }
            for &v in bag {
                if v >= n {
                    return Err(Error::Decomposition(format!("bag {i} holds vertex {v} >= n")));
                }
                bag_count[v] += 1;
                bags_of[v].push(i);
            }
        }
        if let Some(v) = (0..n).find(|&v| bag_count[v] == 0) {
            return Err(Error::Decomposition(format!("vertex {v} is in no bag")));
        }
        for e in g.edges() {
            let covered = bags_of[e.source]
                .iter()
                .any(|&i| self.bags[i].binary_search(&e.target).is_ok());
            if !covered {
                return Err(Error::Decomposition(format!(
                    "edge ({}, {}) is in no bag",
                    e.source, e.target
                )));
            }
        }
        // A vertex's bags form a subtree iff they span (count - 1) tree edges.
        let mut edge_count = vec![0usize; n];
        for &(a, b) in &self.tree {
            for v in intersect(&self.bags[a], &self.bags[b]) {
                edge_count[v] += 1;
            }
        }
        if let Some(v) = (0..n).find(|&v| edge_count[v] + 1 != bag_count[v]) {
            return Err(Error::Decomposition(format!(
                "bags containing vertex {v} are not connected"
            )));
        }
        Ok(())
    }

    /// Restricts every bag to `keep` (vertex ids of this decomposition),
    /// relabelling vertex `keep[i]` to `i`, then [`reduce`](Self::reduce)s.
    pub fn restrict(&self, keep: &[usize], n: usize) -> TreeDecomposition {
        let mut local = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let bags = self
            .bags
            .iter()
            .map(|b| {
                let mut r: Vec<usize> = b
                    .iter()
                    .filter(|&&v| local[v] != usize::MAX)
                    .map(|&v| local[v])
                    .collect();
                r.sort_unstable();
                r
            })
            .collect();
        TreeDecomposition {
            bags,
            tree: self.tree.clone(),
        }
        .reduce()
    }

    /// Contracts every tree edge whose one bag is a subset of the other.
    ///
    /// Afterwards adjacent bags are incomparable, so every separator
    /// `X_i ∩ X_j` is strictly smaller than both bags.
    pub fn reduce(&self) -> TreeDecomposition {
        let nb = self.bags.len();
        if nb <= 1 {
            return self.clone();
        }
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nb];
        for &(a, b) in &self.tree {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        let mut alive = vec![true; nb];
        let mut work: Vec<usize> = (0..nb).collect();
        while let Some(i) = work.pop() {
            if !alive[i] {
                continue;
            }
            let target = adj[i]
                .iter()
                .copied()
                .find(|&j| is_subset(&self.bags[i], &self.bags[j]));
            if let Some(j) = target {
                alive[i] = false;
                let nbrs: Vec<usize> = std::mem::take(&mut adj[i]).into_iter().collect();
                for x in nbrs {
                    adj[x].remove(&i);
                    if x != j {
                        adj[x].insert(j);
                        adj[j].insert(x);
                    }
                }
                work.push(j);
                work.extend(adj[j].iter().copied());
            }
        }
        let ids: Vec<usize> = (0..nb).filter(|&i| alive[i]).collect();
        let mut new_id = vec![usize::MAX; nb];
        for (k, &i) in ids.iter().enumerate() {
            new_id[i] = k;
        }
        let bags = ids.iter().map(|&i| self.bags[i].clone()).collect();
        let mut tree = Vec::new();
        for &i in &ids {
            for &j in &adj[i] {
                if i < j {
                    tree.push((new_id[i], new_id[j]));
                }
            }
        }
        tree.sort_unstable();
        TreeDecomposition { bags, tree }
    }

    /// Parses a PACE `.td` file.
    pub fn parse_pace(text: &str) -> Result<TreeDecomposition> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
        let mut tree = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let f: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| -> Result<usize> {
                s.parse()
                    .map_err(|_| Error::parse(lineno, format!("not a number: {s:?}")))
            };
            match (header, f[0]) {
                (None, "s") => {
                    if f.len() != 5 || f[1] != "td" {
                        return Err(Error::parse(lineno, "expected `s td <bags> <width+1> <n>`"));
                    }
                    let h = (num(f[2])?, num(f[3])?, num(f[4])?);
                    bags = vec![None; h.0];
                    header = Some(h);
                }
                (None, _) => return Err(Error::parse(lineno, "missing `s td` header")),
                (Some(_), "s") => return Err(Error::parse(lineno, "duplicate header")),
                (Some((nb, _, n)), "b") => {
                    if f.len() < 2 {
                        return Err(Error::parse(lineno, "bag line without id"));
                    }
                    let id = num(f[1])?;
                    if id == 0 || id > nb {
                        return Err(Error::parse(lineno, format!("bag id {id} out of range")));
                    }
                    let mut bag = Vec::with_capacity(f.len() - 2);
                    for s in &f[2..] {
                        let v = num(s)?;
                        if v == 0 || v > n {
                            return Err(Error::parse(lineno, format!("vertex {v} out of range")));
                        }
                        bag.push(v - 1);
                    }
                    if bags[id - 1].replace(bag).is_some() {
                        return Err(Error::parse(lineno, format!("bag {id} defined twice")));
                    }
                }
                (Some((nb, _, _)), _) => {
                    if f.len() != 2 {
                        return Err(Error::parse(lineno, "expected a tree edge `<b1> <b2>`"));
                    }
                    let (a, b) = (num(f[0])?, num(f[1])?);
                    if a == 0 || b == 0 || a > nb || b > nb {
                        return Err(Error::parse(lineno, "tree edge out of range"));
                    }
                    tree.push((a - 1, b - 1));
                }
            }
        }
        let (_, declared, _) = header.ok_or_else(|| Error::parse(0, "missing header"))?;
        let bags = bags
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or_else(|| Error::parse(0, format!("bag {} missing", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        let td = TreeDecomposition::new(bags, tree);
        let actual = td.bags.iter().map(Vec::len).max().unwrap_or(0);
        if actual > declared {
            return Err(Error::parse(
                0,
                format!("bag of size {actual} exceeds declared {declared}"),
            ));
        }
        Ok(td)
    }

    /// Writes the PACE `.td` format for a graph on `n` vertices.
    pub fn to_pace(&self, n: usize) -> String {
        let mut s = String::new();
        let largest = self.bags.iter().map(Vec::len).max().unwrap_or(0);
        let _ = writeln!(s, "s td {} {} {}", self.bags.len(), largest, n);
        for (i, bag) in self.bags.iter().enumerate() {
            let _ = write!(s, "b {}", i + 1);
            for v in bag {
                let _ = write!(s, " {}", v + 1);
            }
            s.push('\n');
        }
        for &(a, b) in &self.tree {
            let _ = writeln!(s, "{} {}", a + 1, b + 1);
        }
        s
    }
}

pub(crate) fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Greedy min-degree elimination. A convenience heuristic with no width guarantee.
pub fn min_degree_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::new(Vec::new(), Vec::new());
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for e in g.edges() {
        adj[e.source].insert(e.target);
        adj[e.target].insert(e.source);
    }
    let mut eliminated = vec![false; n];
    let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<(usize, usize)>> =
        (0..n).map(|v| std::cmp::Reverse((adj[v].len(), v))).collect();
    let mut order = Vec::with_capacity(n);
    let mut bag_of = vec![0usize; n];
    let mut bags = Vec::with_capacity(n);
    while let Some(std::cmp::Reverse((deg, v))) = heap.pop() {
        if eliminated[v] || deg != adj[v].len() {
            continue;
        }
        eliminated[v] = true;
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &nbrs[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &nbrs {
            heap.push(std::cmp::Reverse((adj[a].len(), a)));
        }
        let mut bag = nbrs.clone();
        bag.push(v);
        bag_of[v] = bags.len();
        bags.push((v, bag, nbrs));
        order.push(v);
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut tree = Vec::with_capacity(n - 1);
    let last = bags.len() - 1;
    for (i, (_, _, nbrs)) in bags.iter().enumerate() {
        if i == last {
            continue;
        }
        // Attach to the bag of the neighbour eliminated next; isolated pieces hang off the last bag.
        let parent = nbrs.iter().min_by_key(|&&u| pos[u]).map_or(last, |&u| bag_of[u]);
        tree.push((i, parent));
    }
    let bag_lists = bags.into_iter().map(|(_, b, _)| b).collect();
    TreeDecomposition::new(bag_lists, tree)
}
