// SPDX-License-Identifier: Apache-2.0

//! Exact brute-force eccentricities, radius, diameter and median.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distance::{Distance, Finite, Infinite};
use crate::error::{Error, Result};
use crate::graph::{Direction, Graph};
use crate::paths::{sssp_into, INF};

/// Default vertex cap for quadratic-memory computations.
pub const DEFAULT_CAP: usize = 5000;

/// Distance semantics for an ordered pair `(c, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `d(c, v)` on an undirected graph.
    Undirected,
    /// `d(c → v)`.
    Source,
    /// `max{d(c → v), d(v → c)}`.
    Max,
    /// `min{d(c → v), d(v → c)}`.
    Min,
    /// `d(c → v) + d(v → c)`.
    Roundtrip,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::Undirected,
        Variant::Source,
        Variant::Max,
        Variant::Min,
        Variant::Roundtrip,
    ];

    /// Combines `to = d(c → v)` and `from = d(v → c)`.
    #[inline]
    pub fn pair(self, to: Distance, from: Distance) -> Distance {
        match self {
            Variant::Undirected | Variant::Source => to,
            Variant::Max => to.max(from),
            Variant::Min => to.min(from),
            Variant::Roundtrip => to + from,
        }
    }

    #[inline]
    pub(crate) fn pair_raw(self, to: u64, from: u64) -> u64 {
        match self {
            Variant::Undirected | Variant::Source => to,
            Variant::Max => to.max(from),
            Variant::Min => to.min(from),
            Variant::Roundtrip => match to.checked_add(from) {
                Some(s) if s != INF => s,
                _ => INF,
            },
        }
    }

    /// Whether the pair distance needs `d(v → c)` at all.
    pub fn needs_backward(self) -> bool {
        !matches!(self, Variant::Undirected | Variant::Source)
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Undirected => "undirected",
            Variant::Source => "source",
            Variant::Max => "max",
            Variant::Min => "min",
            Variant::Roundtrip => "roundtrip",
        }
    }

    pub(crate) fn check(self, g: &Graph) -> Result<()> {
        if self == Variant::Undirected && !g.is_undirected() {
            return Err(Error::input("undirected variant requires an undirected graph"));
        }
        Ok(())
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::input(format!("unknown variant {s:?}")))
    }
}

/// Row-major `n × n` matrix of `d(u → v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    raw: Vec<u64>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Distance {
        Distance::from_raw(self.raw[u * self.n + v])
    }

    #[inline]
    pub(crate) fn raw(&self, u: usize, v: usize) -> u64 {
        self.raw[u * self.n + v]
    }

    pub(crate) fn row_raw(&self, u: usize) -> &[u64] {
        &self.raw[u * self.n..(u + 1) * self.n]
    }
}

/// All-pairs distances by `n` single-source runs, refusing `n > DEFAULT_CAP`.
pub fn all_pairs(g: &Graph) -> Result<DistanceMatrix> {
    all_pairs_capped(g, DEFAULT_CAP)
}

/// All-pairs distances with an explicit vertex cap.
pub fn all_pairs_capped(g: &Graph, cap: usize) -> Result<DistanceMatrix> {
    let n = g.n();
    if n > cap {
        return Err(Error::Capacity { n, cap });
    }
    let mut raw = vec![INF; n * n];
    if n > 0 {
        raw.par_chunks_mut(n)
            .enumerate()
            .for_each(|(u, row)| sssp_into(g, u, Direction::Forward, row));
    }
    Ok(DistanceMatrix { n, raw })
}

/// Per-vertex eccentricities with derived radius and diameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EccentricityReport {
    pub variant: Variant,
    pub radius: Distance,
    pub diameter: Distance,
    /// Smallest vertex id attaining the radius.
    pub center: usize,
    /// `(c, v)` with `ecc[c]` equal to the diameter and `v` a farthest vertex from `c`.
    #[serde(rename = "witness")]
    pub periphery_witness: (usize, usize),
    pub ecc: Vec<Distance>,
}

impl EccentricityReport {
    /// Builds a report from eccentricities and, per vertex, one farthest vertex.
    pub fn from_parts(variant: Variant, ecc: Vec<Distance>, farthest: &[usize]) -> Self {
        assert_eq!(ecc.len(), farthest.len());
        assert!(!ecc.is_empty(), "report needs at least one vertex");
        let mut center = 0;
        let mut peri = 0;
        for (v, &e) in ecc.iter().enumerate() {
            if e < ecc[center] {
                center = v;
            }
            if e > ecc[peri] {
                peri = v;
            }
        }
        EccentricityReport {
            variant,
            radius: ecc[center],
            diameter: ecc[peri],
            center,
            periphery_witness: (peri, farthest[peri]),
            ecc,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::parse(e.line(), e.to_string()))
    }

    /// `vertex<TAB>ecc` lines.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("vertex\tecc\n");
        for (v, e) in self.ecc.iter().enumerate() {
            s.push_str(&format!("{v}\t{e}\n"));
        }
        s
    }
}

/// Exact eccentricities under `variant`, using the default capacity cap.
pub fn exact_eccentricities(g: &Graph, variant: Variant) -> Result<EccentricityReport> {
    exact_eccentricities_capped(g, variant, DEFAULT_CAP)
}

pub fn exact_eccentricities_capped(g: &Graph, variant: Variant, cap: usize) -> Result<EccentricityReport> {
    variant.check(g)?;
    if g.n() == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    let m = all_pairs_capped(g, cap)?;
    Ok(eccentricities_from_matrix(&m, variant))
}

/// Eccentricities from a precomputed matrix. Ties pick the smallest farthest id.
pub fn eccentricities_from_matrix(m: &DistanceMatrix, variant: Variant) -> EccentricityReport {
    let n = m.n();
    let (ecc, far): (Vec<Distance>, Vec<usize>) = (0..n)
        .into_par_iter()
        .map(|c| {
            let mut best = 0u64;
            let mut arg = c;
            for v in 0..n {
                if v == c {
                    continue;
                }
                let d = variant.pair_raw(m.raw(c, v), m.raw(v, c));
                if d > best || arg == c && d >= best {
                    best = d;
                    arg = v;
                }
            }
            (Distance::from_raw(best), arg)
        })
        .unzip();
    EccentricityReport::from_parts(variant, ecc, &far)
}

/// Vertex minimizing `Σ_v d(c → v)` (smallest id on ties) and that sum.
pub fn exact_median(g: &Graph) -> Result<(usize, Distance)> {
    if g.n() == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    let m = all_pairs(g)?;
    Ok(median_from_matrix(&m))
}

pub fn median_from_matrix(m: &DistanceMatrix) -> (usize, Distance) {
    let sums: Vec<Distance> = (0..m.n())
        .map(|c| {
            m.row_raw(c)
                .iter()
                .fold(Finite(0), |acc, &d| acc + Distance::from_raw(d))
        })
        .collect();
    let best = (0..m.n()).min_by_key(|&c| (sums[c], c)).expect("nonempty");
    (best, sums[best])
}

/// Eccentricity of a single vertex, by two traversals.
pub fn eccentricity_of(g: &Graph, c: usize, variant: Variant) -> Result<Distance> {
    variant.check(g)?;
    crate::paths::check_vertex(g, c)?;
    let mut to = vec![INF; g.n()];
    sssp_into(g, c, Direction::Forward, &mut to);
    let mut from = vec![INF; g.n()];
    if variant.needs_backward() {
        sssp_into(g, c, Direction::Backward, &mut from);
    }
    let best = (0..g.n())
        .filter(|&v| v != c)
        .map(|v| variant.pair_raw(to[v], from[v]))
        .max()
        .unwrap_or(0);
    Ok(if best == INF { Infinite } else { Finite(best) })
}
