// SPDX-License-Identifier: Apache-2.0

//! Orthogonal range-max queries over weighted points in `d` dimensions.
//!
//! A layered range tree: one balanced tree per dimension, each node holding
//! an associated structure on the next dimension, and a segment tree on the
//! last one. Nodes below an adaptive size threshold are scanned instead of
//! nested further, which bounds storage when `d` is large.

use crate::error::{Error, Result};

/// A point with integer coordinates, a value, and an opaque payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangePoint {
    pub coords: Vec<i64>,
    pub value: i64,
    pub payload: usize,
}

/// Immutable index answering "largest value inside a closed box".
///
/// Among points with equal value the smallest payload wins.
#[derive(Clone, Debug)]
pub struct RangeMaxIndex {
    d: usize,
    coords: Vec<i64>,
    values: Vec<i64>,
    payloads: Vec<usize>,
    leaf: usize,
    root: Option<Level>,
}

#[derive(Clone, Debug)]
enum Level {
    /// Check every remaining dimension point by point.
    Scan { dim: usize, idx: Vec<u32> },
    /// Last dimension: sorted keys plus a max segment tree.
    Last { keys: Vec<i64>, seg: Vec<u32>, size: usize },
    /// Inner dimension: sorted keys and a node tree with associated levels.
    Tree {
        dim: usize,
        keys: Vec<i64>,
        idx: Vec<u32>,
        nodes: Vec<Node>,
    },
}

#[derive(Clone, Debug)]
struct Node {
    start: usize,
    end: usize,
    /// `None` for leaves, which are scanned.
    inner: Option<(Box<Level>, usize, usize)>,
}

const NONE: u32 = u32::MAX;

impl RangeMaxIndex {
    /// Builds the index; every point must have exactly `d` coordinates.
    pub fn build(d: usize, points: Vec<RangePoint>) -> Result<Self> {
        let n = points.len();
        if n >= NONE as usize {
            return Err(Error::input("too many points"));
        }
        let mut coords = Vec::with_capacity(n * d);
        let mut values = Vec::with_capacity(n);
        let mut payloads = Vec::with_capacity(n);
        for p in points {
            if p.coords.len() != d {
                return Err(Error::input(format!(
                    "point has {} coordinates, expected {d}",
                    p.coords.len()
                )));
            }
            coords.extend_from_slice(&p.coords);
            values.push(p.value);
            payloads.push(p.payload);
        }
        let mut idx = RangeMaxIndex {
            d,
            coords,
            values,
            payloads,
            leaf: choose_leaf(n, d),
            root: None,
        };
        if n > 0 {
            let all: Vec<u32> = (0..n as u32).collect();
            idx.root = Some(idx.build_level(all, 0));
        }
        Ok(idx)
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    fn coord(&self, p: u32, dim: usize) -> i64 {
        self.coords[p as usize * self.d + dim]
    }

    #[inline]
    fn better(&self, a: u32, b: u32) -> u32 {
        if b == NONE {
            return a;
        }
        if a == NONE {
            return b;
        }
        let (ka, kb) = (self.values[a as usize], self.values[b as usize]);
        if ka > kb || ka == kb && self.payloads[a as usize] < self.payloads[b as usize] {
            a
        } else {
            b
        }
    }

    fn build_level(&self, mut idx: Vec<u32>, dim: usize) -> Level {
        if dim + 1 >= self.d {
            // d == 0 degenerates to a single global maximum in `Last` form.
            let dim = self.d.saturating_sub(1);
            if self.d > 0 {
                idx.sort_by_key(|&p| (self.coord(p, dim), p));
            }
            let keys = if self.d > 0 {
                idx.iter().map(|&p| self.coord(p, dim)).collect()
            } else {
                vec![0; idx.len()]
            };
            let size = idx.len().next_power_of_two();
            let mut seg = vec![NONE; 2 * size];
            seg[size..size + idx.len()].copy_from_slice(&idx);
            for i in (1..size).rev() {
                seg[i] = self.better(seg[2 * i], seg[2 * i + 1]);
            }
            return Level::Last { keys, seg, size };
        }
        if idx.len() <= self.leaf {
            return Level::Scan { dim, idx };
        }
        idx.sort_by_key(|&p| (self.coord(p, dim), p));
        let keys: Vec<i64> = idx.iter().map(|&p| self.coord(p, dim)).collect();
        let mut nodes = Vec::new();
        self.build_node(&idx, dim, 0, idx.len(), &mut nodes);
        Level::Tree { dim, keys, idx, nodes }
    }

    fn build_node(&self, idx: &[u32], dim: usize, start: usize, end: usize, nodes: &mut Vec<Node>) -> usize {
        let me = nodes.len();
        nodes.push(Node {
            start,
            end,
            inner: None,
        });
        if end - start > self.leaf {
            let assoc = Box::new(self.build_level(idx[start..end].to_vec(), dim + 1));
            let mid = start + (end - start) / 2;
            let l = self.build_node(idx, dim, start, mid, nodes);
            let r = self.build_node(idx, dim, mid, end, nodes);
            nodes[me].inner = Some((assoc, l, r));
        }
        me
    }

    fn inside(&self, p: u32, lo: &[i64], hi: &[i64], from: usize) -> bool {
        (from..self.d).all(|k| {
            let c = self.coord(p, k);
            lo[k] <= c && c <= hi[k]
        })
    }

    /// Largest `(value, payload)` with `lo[k] ≤ coords[k] ≤ hi[k]` for all `k`.
    pub fn query(&self, lo: &[i64], hi: &[i64]) -> Option<(i64, usize)> {
        assert!(lo.len() == self.d && hi.len() == self.d, "box dimension mismatch");
        let best = match &self.root {
            Some(level) => self.query_level(level, lo, hi),
            None => NONE,
        };
        (best != NONE).then(|| (self.values[best as usize], self.payloads[best as usize]))
    }

    fn query_level(&self, level: &Level, lo: &[i64], hi: &[i64]) -> u32 {
        match level {
            Level::Scan { dim, idx } => idx
                .iter()
                .filter(|&&p| self.inside(p, lo, hi, *dim))
                .fold(NONE, |b, &p| self.better(p, b)),
            Level::Last { keys, seg, size } => {
                let (l, r) = if self.d == 0 {
                    (0, keys.len())
                } else {
                    let k = self.d - 1;
                    bounds(keys, lo[k], hi[k])
                };
                self.seg_query(seg, *size, l, r)
            }
            Level::Tree { dim, keys, idx, nodes } => {
                let (l, r) = bounds(keys, lo[*dim], hi[*dim]);
                if l >= r {
                    return NONE;
                }
                self.query_node(nodes, 0, idx, *dim, l, r, lo, hi)
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn query_node(
        &self,
        nodes: &[Node],
        at: usize,
        idx: &[u32],
        dim: usize,
        l: usize,
        r: usize,
        lo: &[i64],
        hi: &[i64],
    ) -> u32 {
        let node = &nodes[at];
        if r <= node.start || node.end <= l {
            return NONE;
        }
        match &node.inner {
            None => idx[node.start.max(l)..node.end.min(r)]
                .iter()
                .filter(|&&p| self.inside(p, lo, hi, dim + 1))
                .fold(NONE, |b, &p| self.better(p, b)),
            Some((assoc, left, right)) => {
                if l <= node.start && node.end <= r {
                    return self.query_level(assoc, lo, hi);
                }
                let a = self.query_node(nodes, *left, idx, dim, l, r, lo, hi);
                let b = self.query_node(nodes, *right, idx, dim, l, r, lo, hi);
                self.better(a, b)
            }
        }
    }

    fn seg_query(&self, seg: &[u32], size: usize, mut l: usize, mut r: usize) -> u32 {
        let mut best = NONE;
        l += size;
        r += size;
        while l < r {
            if l & 1 == 1 {
                best = self.better(seg[l], best);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                best = self.better(seg[r], best);
            }
            l >>= 1;
            r >>= 1;
        }
        best
    }
}

/// Positions `[l, r)` of sorted `keys` within `[lo, hi]`.
fn bounds(keys: &[i64], lo: i64, hi: i64) -> (usize, usize) {
    let l = keys.partition_point(|&k| k < lo);
    let r = keys.partition_point(|&k| k <= hi);
    (l, r.max(l))
}

/// Smallest power-of-two leaf size whose estimated storage fits the budget.
fn choose_leaf(n: usize, d: usize) -> usize {
    if d <= 1 {
        return n.max(1);
    }
    let budget = (32 * n * d + 1024) as f64;
    let mut leaf = 8usize;
    while leaf < n && estimate(n as f64, d, leaf as f64) > budget {
        leaf *= 2;
    }
    leaf
}

fn estimate(n: f64, dims: usize, leaf: f64) -> f64 {
    if dims <= 1 || n <= leaf {
        return n;
    }
    // Keys plus one associated structure per tree node above the leaf size.
    let mut total = n;
    let mut m = n;
    let mut count = 1.0;
    while m > leaf {
        total += count * estimate(m, dims - 1, leaf);
        m /= 2.0;
        count *= 2.0;
    }
    total
}

/// Free-function form of [`RangeMaxIndex::build`].
pub fn range_max_build(d: usize, points: Vec<RangePoint>) -> Result<RangeMaxIndex> {
    RangeMaxIndex::build(d, points)
}

/// Free-function form of [`RangeMaxIndex::query`].
pub fn range_max_query(idx: &RangeMaxIndex, lo: &[i64], hi: &[i64]) -> Option<(i64, usize)> {
    idx.query(lo, hi)
}
