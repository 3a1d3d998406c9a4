// SPDX-License-Identifier: Apache-2.0

use super::portal::split_unchecked;
use super::three_layer::{three_layer_raw, ThreeLayerInstance};
use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Direction, Graph};
use crate::oracle::{all_pairs_capped, EccentricityReport, Variant};
use crate::paths::{sssp_into, INF};

/// Exact eccentricities of every vertex, recursing on portal splits of `td`.
pub fn tw_eccentricities(g: &Graph, td: &TreeDecomposition, variant: Variant) -> Result<EccentricityReport> {
    variant.check(g)?;
    if g.n() == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    td.validate(g)?;
    let base = base_size(td.width());
    let (ecc, far): (Vec<u64>, Vec<usize>) = solve(g, &td.reduce(), variant, base).into_iter().unzip();
    let ecc = ecc.into_iter().map(crate::distance::Distance::from_raw).collect();
    Ok(EccentricityReport::from_parts(variant, ecc, &far))
}

/// Pieces with at most `max(width³, 16)` vertices go to the brute-force oracle.
pub fn base_size(width: usize) -> usize {
    width.saturating_pow(3).max(16)
}

/// Per vertex of `h`: eccentricity within `h` and a farthest vertex.
fn solve(h: &Graph, td: &TreeDecomposition, variant: Variant, base: usize) -> Vec<(u64, usize)> {
    let n = h.n();
    if n <= base || td.bags.len() < 2 {
        return brute(h, variant);
    }
    let split = split_unchecked(h, td);
    let q = &split.portals;
    let directed = !h.is_undirected();

    // Traversals from each portal.
    let fwd: Vec<Vec<u64>> = q.iter().map(|&p| sssp(h, p, Direction::Forward)).collect();
    let bwd: Vec<Vec<u64>> = if directed {
        q.iter().map(|&p| sssp(h, p, Direction::Backward)).collect()
    } else {
        fwd.clone()
    };

    let mut in_s = vec![false; n];
    for &v in &split.side_s {
        in_s[v] = true;
    }
    let mut is_portal = vec![false; n];
    for &p in q {
        is_portal[p] = true;
    }
    let s_inner: Vec<usize> = split.side_s.iter().copied().filter(|&v| !is_portal[v]).collect();
    let mut piece2 = split.complement.clone();
    piece2.extend_from_slice(q);
    piece2.sort_unstable();

    let sub = |verts: &[usize]| -> (Graph, TreeDecomposition) { (augment(h, verts, q, &fwd), td.restrict(verts, n)) };
    let ((g1, td1), (g2, td2)) = (sub(&split.side_s), sub(&piece2));
    let (r1, r2) = rayon::join(|| solve(&g1, &td1, variant, base), || solve(&g2, &td2, variant, base));

    let mut out = vec![(0u64, usize::MAX); n];
    for (i, &v) in split.side_s.iter().enumerate() {
        out[v] = (r1[i].0, split.side_s[r1[i].1]);
    }
    for (i, &v) in piece2.iter().enumerate() {
        if !in_s[v] {
            out[v] = (r2[i].0, piece2[r2[i].1]);
        }
    }
    for (x, &p) in q.iter().enumerate() {
        out[p] = farthest_from(p, &fwd[x], &bwd[x], variant);
    }

    for (from, to) in [(&s_inner, &split.complement), (&split.complement, &s_inner)] {
        for (i, (d, w)) in cross(from, to, &fwd, &bwd, variant).into_iter().enumerate() {
            let v = from[i];
            if let Some(c) = w {
                let cur = out[v];
                if d > cur.0 || d == cur.0 && to[c] < cur.1 {
                    out[v] = (d, to[c]);
                }
            }
        }
    }
    out
}

fn sssp(h: &Graph, s: usize, dir: Direction) -> Vec<u64> {
    let mut d = vec![INF; h.n()];
    sssp_into(h, s, dir, &mut d);
    d
}

/// Induced subgraph on `verts` plus portal-to-portal arcs carrying distances in `h`.
fn augment(h: &Graph, verts: &[usize], q: &[usize], fwd: &[Vec<u64>]) -> Graph {
    let mut local = vec![usize::MAX; h.n()];
    for (i, &v) in verts.iter().enumerate() {
        local[v] = i;
    }
    let mut edges: Vec<(usize, usize, u64)> = h
        .edges()
        .iter()
        .filter(|e| local[e.source] != usize::MAX && local[e.target] != usize::MAX)
        .map(|e| (local[e.source], local[e.target], e.weight))
        .collect();
    for (x, &p) in q.iter().enumerate() {
        for &p2 in q {
            let d = fwd[x][p2];
            if p != p2 && d != INF && (!h.is_undirected() || p < p2) {
                edges.push((local[p], local[p2], d));
            }
        }
    }
    Graph::new(verts.len(), edges, h.is_undirected()).expect("augmented piece is valid")
}

/// Farthest vertex from `c` given `to[v] = d(c → v)` and `from[v] = d(v → c)`.
fn farthest_from(c: usize, to: &[u64], from: &[u64], variant: Variant) -> (u64, usize) {
    let mut best = (0u64, c);
    for v in 0..to.len() {
        if v == c {
            continue;
        }
        let d = variant.pair_raw(to[v], from[v]);
        if d > best.0 || best.1 == c {
            best = (d, v);
        }
    }
    best
}

/// For each `a ∈ from`, the farthest `c ∈ to` under `variant`, where every
/// path between the two sets passes through a portal.
fn cross(
    from: &[usize],
    to: &[usize],
    fwd: &[Vec<u64>],
    bwd: &[Vec<u64>],
    variant: Variant,
) -> Vec<(u64, Option<usize>)> {
    let k = fwd.len();
    let sum = |x: u64, y: u64| {
        if x == INF || y == INF {
            INF
        } else {
            x.saturating_add(y).min(INF - 1)
        }
    };
    // fwd[q][v] = d(q → v); bwd[q][v] = d(v → q).
    let forward = || ThreeLayerInstance::from_fn(from.len(), k, to.len(), |a, q| bwd[q][from[a]], |q, c| fwd[q][to[c]]);
    let backward =
        || ThreeLayerInstance::from_fn(from.len(), k, to.len(), |a, q| fwd[q][from[a]], |q, c| bwd[q][to[c]]);
    match variant {
        Variant::Undirected | Variant::Source => three_layer_raw(&forward()),
        Variant::Max => {
            let f = three_layer_raw(&forward());
            let b = three_layer_raw(&backward());
            f.into_iter()
                .zip(b)
                .map(|(x, y)| match (x, y) {
                    ((dx, wx), (dy, wy)) if dx > dy || dx == dy && wx <= wy => (dx, wx),
                    (_, y) => y,
                })
                .collect()
        }
        Variant::Min => {
            // Middle layer: (q, forward) for q < k, (q, backward) for q ≥ k.
            let inst = ThreeLayerInstance::from_fn(
                from.len(),
                2 * k,
                to.len(),
                |a, m| if m < k { bwd[m][from[a]] } else { fwd[m - k][from[a]] },
                |m, c| if m < k { fwd[m][to[c]] } else { bwd[m - k][to[c]] },
            );
            three_layer_raw(&inst)
        }
        Variant::Roundtrip => {
            // Middle layer: ordered portal pairs (q, q'), out through q and back through q'.
            let inst = ThreeLayerInstance::from_fn(
                from.len(),
                k * k,
                to.len(),
                |a, m| sum(bwd[m / k][from[a]], fwd[m % k][from[a]]),
                |m, c| sum(fwd[m / k][to[c]], bwd[m % k][to[c]]),
            );
            three_layer_raw(&inst)
        }
    }
}

fn brute(h: &Graph, variant: Variant) -> Vec<(u64, usize)> {
    let n = h.n();
    let m = all_pairs_capped(h, usize::MAX).expect("no cap");
    (0..n)
        .map(|c| {
            let to: Vec<u64> = (0..n).map(|v| m.raw(c, v)).collect();
            let from: Vec<u64> = (0..n).map(|v| m.raw(v, c)).collect();
            farthest_from(c, &to, &from, variant)
        })
        .collect()
}
