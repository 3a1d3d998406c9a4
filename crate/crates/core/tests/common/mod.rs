// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code, clippy::needless_range_loop)]

use ecclab_core::{Distance, Graph, Variant};

/// All-pairs distances by Floyd–Warshall, `None` for unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u64>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for e in g.edges() {
        let mut set = |u: usize, v: usize| {
            if d[u][v].is_none_or(|x| e.weight < x) {
                d[u][v] = Some(e.weight);
            }
        };
        set(e.source, e.target);
        if g.is_undirected() {
            set(e.target, e.source);
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = d[i][k] else { continue };
            for j in 0..n {
                if let Some(kj) = d[k][j] {
                    if d[i][j].is_none_or(|x| ik + kj < x) {
                        d[i][j] = Some(ik + kj);
                    }
                }
            }
        }
    }
    d
}

fn dist(x: Option<u64>) -> Distance {
    x.map_or(Distance::Infinite, Distance::Finite)
}

/// Eccentricities by a double loop over the Floyd–Warshall matrix.
pub fn brute_eccentricities(g: &Graph, variant: Variant) -> Vec<Distance> {
    let d = floyd_warshall(g);
    let n = g.n();
    (0..n)
        .map(|c| {
            (0..n)
                .filter(|&v| v != c)
                .map(|v| {
                    let (to, from) = (dist(d[c][v]), dist(d[v][c]));
                    match variant {
                        Variant::Undirected | Variant::Source => to,
                        Variant::Max => to.max(from),
                        Variant::Min => to.min(from),
                        Variant::Roundtrip => to + from,
                    }
                })
                .max()
                .unwrap_or(Distance::ZERO)
        })
        .collect()
}

pub fn brute_radius(g: &Graph, variant: Variant) -> Distance {
    brute_eccentricities(g, variant)
        .into_iter()
        .min()
        .unwrap_or(Distance::ZERO)
}

pub fn brute_diameter(g: &Graph, variant: Variant) -> Distance {
    brute_eccentricities(g, variant)
        .into_iter()
        .max()
        .unwrap_or(Distance::ZERO)
}
