// SPDX-License-Identifier: Apache-2.0

//! Immutable weighted graphs in compressed adjacency form, and their text format.
//!
//! The text format is line oriented:
//!
//! ```text
//! # comment
//! p <n> <m> <D|U> <W|1>
//! u v        (unweighted)
//! u v w      (weighted)
//! ```
//!
//! Vertices are 0-indexed. Undirected files list every edge once.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// One stored edge. Undirected graphs store each edge once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub weight: u64,
}

/// Traversal direction: `Forward` follows arcs, `Backward` walks them in reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Csr {
    offsets: Vec<usize>,
    arcs: Vec<(usize, u64)>,
}

impl Csr {
    fn build(n: usize, arcs: impl Iterator<Item = (usize, usize, u64)> + Clone) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for (u, _, _) in arcs.clone() {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut out = vec![(0usize, 0u64); offsets[n]];
        for (u, v, w) in arcs {
            out[fill[u]] = (v, w);
            fill[u] += 1;
        }
        Csr { offsets, arcs: out }
    }

    #[inline]
    fn row(&self, v: usize) -> &[(usize, u64)] {
        &self.arcs[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// A graph on vertices `0..n` with nonnegative integer weights.
///
/// Undirected graphs keep each input edge once in [`Graph::edges`] and expose
/// both orientations through the adjacency accessors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    undirected: bool,
    max_weight: u64,
    out: Csr,
    inc: Csr,
}

impl Graph {
    /// Builds a graph, rejecting out-of-range endpoints and self-loops.
    pub fn new<I>(n: usize, edges: I, undirected: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let edges: Vec<Edge> = edges
            .into_iter()
            .map(|(source, target, weight)| Edge { source, target, weight })
            .collect();
        for e in &edges {
            if e.source >= n || e.target >= n {
                return Err(Error::input(format!(
                    "edge ({}, {}) out of range for n = {n}",
                    e.source, e.target
                )));
            }
            if e.source == e.target {
                return Err(Error::input(format!("self-loop at vertex {}", e.source)));
            }
            if e.weight == u64::MAX {
                return Err(Error::input("edge weight too large"));
            }
        }
        Ok(Self::from_checked(n, edges, undirected))
    }

    fn from_checked(n: usize, edges: Vec<Edge>, undirected: bool) -> Self {
        let max_weight = edges.iter().map(|e| e.weight).max().unwrap_or(0);
        let arcs = edges.iter().flat_map(move |e| {
            let fwd = std::iter::once((e.source, e.target, e.weight));
            let back = undirected.then_some((e.target, e.source, e.weight));
            fwd.chain(back)
        });
        let out = Csr::build(n, arcs.clone());
        let inc = Csr::build(n, arcs.map(|(u, v, w)| (v, u, w)));
        Graph {
            n,
            edges,
            undirected,
            max_weight,
            out,
            inc,
        }
    }

    /// Directed graph with unit weights.
    pub fn directed_unit(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, arcs.iter().map(|&(u, v)| (u, v, 1)), false)
    }

    /// Undirected graph with unit weights.
    pub fn undirected_unit(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges.iter().map(|&(u, v)| (u, v, 1)), true)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored edges (undirected edges count once).
    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Number of arcs in the adjacency structure (undirected edges count twice).
    #[inline]
    pub fn arc_count(&self) -> usize {
        self.out.arcs.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn is_undirected(&self) -> bool {
        self.undirected
    }

    /// Largest edge weight, `M`; 0 for an edgeless graph.
    #[inline]
    pub fn max_weight(&self) -> u64 {
        self.max_weight
    }

    /// True when every edge has weight 1 (vacuously for edgeless graphs).
    pub fn is_unit_weight(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 1)
    }

    #[inline]
    pub fn out_arcs(&self, v: usize) -> &[(usize, u64)] {
        self.out.row(v)
    }

    #[inline]
    pub fn in_arcs(&self, v: usize) -> &[(usize, u64)] {
        self.inc.row(v)
    }

    #[inline]
    pub fn arcs(&self, v: usize, dir: Direction) -> &[(usize, u64)] {
        match dir {
            Direction::Forward => self.out_arcs(v),
            Direction::Backward => self.in_arcs(v),
        }
    }

    /// Out-degree (degree for undirected graphs).
    pub fn degree(&self, v: usize) -> usize {
        self.out_arcs(v).len()
    }

    /// Graph with every arc reversed. Undirected graphs are returned unchanged.
    pub fn reversed(&self) -> Graph {
        if self.undirected {
            return self.clone();
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                source: e.target,
                target: e.source,
                weight: e.weight,
            })
            .collect();
        Self::from_checked(self.n, edges, false)
    }

    /// The directed graph with both orientations of every edge.
    pub fn bidirected(&self) -> Graph {
        let edges = self
            .edges
            .iter()
            .flat_map(|e| {
                [
                    *e,
                    Edge {
                        source: e.target,
                        target: e.source,
                        weight: e.weight,
                    },
                ]
            })
            .collect();
        Self::from_checked(self.n, edges, false)
    }

    /// Subgraph induced by `vertices` (in the given order), relabelled to `0..k`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| local[e.source] != usize::MAX && local[e.target] != usize::MAX)
            .map(|e| Edge {
                source: local[e.source],
                target: local[e.target],
                weight: e.weight,
            })
            .collect();
        Self::from_checked(vertices.len(), edges, self.undirected)
    }

    /// Parses the text format described in the module docs.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize, bool, bool)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match header {
                None => {
                    if fields.len() != 5 || fields[0] != "p" {
                        return Err(Error::parse(lineno, "expected `p <n> <m> <D|U> <W|1>`"));
                    }
                    let n = parse_num(fields[1], lineno)?;
                    let m = parse_num(fields[2], lineno)?;
                    let undirected = match fields[3] {
                        "D" => false,
                        "U" => true,
                        other => return Err(Error::parse(lineno, format!("bad kind {other:?}"))),
                    };
                    let weighted = match fields[4] {
                        "W" => true,
                        "1" => false,
                        other => return Err(Error::parse(lineno, format!("bad weight flag {other:?}"))),
                    };
                    header = Some((n, m, undirected, weighted));
                    edges.reserve(m);
                }
                Some((n, _, _, weighted)) => {
                    let want = if weighted { 3 } else { 2 };
                    if fields.len() != want {
                        return Err(Error::parse(
                            lineno,
                            format!("expected {want} fields, found {}", fields.len()),
                        ));
                    }
                    let u: usize = parse_num(fields[0], lineno)?;
                    let v: usize = parse_num(fields[1], lineno)?;
                    let w: u64 = if weighted { parse_num(fields[2], lineno)? } else { 1 };
                    if u >= n || v >= n {
                        return Err(Error::parse(lineno, format!("vertex out of range (n = {n})")));
                    }
                    if u == v {
                        return Err(Error::parse(lineno, "self-loop"));
                    }
                    edges.push((u, v, w));
                }
            }
        }
        let (n, m, undirected, _) = header.ok_or_else(|| Error::parse(0, "missing header"))?;
        if edges.len() != m {
            return Err(Error::parse(
                0,
                format!("header announces {m} edges, found {}", edges.len()),
            ));
        }
        Graph::new(n, edges, undirected)
    }

    /// Serializes to the text format. Unit-weight graphs are written unweighted.
    pub fn to_text(&self) -> String {
        let weighted = !self.is_unit_weight();
        let mut s = String::with_capacity(16 + self.edges.len() * 12);
        let _ = writeln!(
            s,
            "p {} {} {} {}",
            self.n,
            self.edges.len(),
            if self.undirected { 'U' } else { 'D' },
            if weighted { 'W' } else { '1' }
        );
        for e in &self.edges {
            if weighted {
                let _ = writeln!(s, "{} {} {}", e.source, e.target, e.weight);
            } else {
                let _ = writeln!(s, "{} {}", e.source, e.target);
            }
        }
        s
    }
}

fn parse_num<T: std::str::FromStr>(s: &str, line: usize) -> Result<T> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("not a number: {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loops_and_range() {
        assert!(Graph::directed_unit(2, &[(0, 0)]).is_err());
        assert!(Graph::directed_unit(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn undirected_adjacency_is_symmetric() {
        let g = Graph::new(3, [(0, 1, 4), (1, 2, 5)], true).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.arc_count(), 4);
        assert_eq!(g.out_arcs(1), g.in_arcs(1));
        assert_eq!(g.max_weight(), 5);
    }

    #[test]
    fn text_roundtrip() {
        let g = Graph::new(4, [(0, 1, 2), (3, 1, 7)], false).unwrap();
        let text = g.to_text();
        assert_eq!(text, "p 4 2 D W\n0 1 2\n3 1 7\n");
        let back = Graph::parse(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn parse_comments_and_unweighted() {
        let g = Graph::parse("# hi\np 3 2 U 1\n0 1\n# mid\n1 2\n").unwrap();
        assert!(g.is_undirected());
        assert_eq!(g.degree(1), 2);
        assert!(Graph::parse("p 3 2 U 1\n0 1\n").is_err());
        assert!(Graph::parse("p 3 1 U 1\n0 1 5\n").is_err());
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::directed_unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let h = g.induced(&[2, 3, 0]);
        assert_eq!(h.n(), 3);
        let arcs: Vec<_> = h.edges().iter().map(|e| (e.source, e.target)).collect();
        assert_eq!(arcs, vec![(0, 1), (1, 2)]);
    }
}
