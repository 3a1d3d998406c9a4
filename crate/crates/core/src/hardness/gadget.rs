// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{all_pairs_capped, eccentricities_from_matrix, median_from_matrix, Variant};
use crate::paths::topological_order;
use crate::treewidth::TreeDecomposition;

/// The quantity a gadget encodes its instance's answer in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Radius(Variant),
    Diameter(Variant),
    /// Eccentricities of the probe vertices listed in the sidecar.
    Eccentricity(Variant),
    /// Smallest sum of distances from one vertex to all others.
    Median,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Radius(v) => write!(f, "{v} radius"),
            Target::Diameter(v) => write!(f, "{v} diameter"),
            Target::Eccentricity(v) => write!(f, "{v} eccentricities"),
            Target::Median => f.write_str("median"),
        }
    }
}

/// A promised value or lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Promise {
    Exact(Distance),
    AtLeast(Distance),
}

impl Promise {
    pub fn holds(self, observed: Distance) -> bool {
        match self {
            Promise::Exact(v) => observed == v,
            Promise::AtLeast(v) => observed >= v,
        }
    }
}

impl fmt::Display for Promise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Promise::Exact(v) => write!(f, "= {v}"),
            Promise::AtLeast(v) => write!(f, ">= {v}"),
        }
    }
}

/// Original set index to the vertex standing for it (`None` when the set
/// was removed by preprocessing).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessMap {
    pub a: Vec<Option<usize>>,
    pub b: Vec<Option<usize>>,
}

/// Per-vertex promise for eccentricity targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Probe {
    pub vertex: usize,
    /// Selects `yes_value` or `no_bound` for this vertex.
    pub answer: bool,
}

/// Everything about a gadget except its graph; serialized next to the graph file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub gadget: String,
    pub target: Target,
    /// Answer of the source instance.
    pub answer: bool,
    /// Promise when the source instance is a yes-instance.
    pub yes_value: Promise,
    /// Promise when it is a no-instance.
    pub no_bound: Promise,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub probes: Vec<Probe>,
    /// Vertices with a fixed eccentricity regardless of the answer.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub anchors: Vec<(usize, Distance)>,
    pub is_dag: bool,
    pub witness_map: WitnessMap,
}

impl Sidecar {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sidecar serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::input(format!("bad sidecar: {e}")))
    }

    /// The promise that applies to this instance.
    pub fn promise(&self) -> Promise {
        if self.answer {
            self.yes_value
        } else {
            self.no_bound
        }
    }
}

#[derive(Debug, Clone)]
pub struct GadgetOutput {
    pub graph: Graph,
    pub sidecar: Sidecar,
    pub pathwidth_witness: Option<TreeDecomposition>,
}

/// Outcome of checking a gadget against the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    /// Observed target value (the worst probe for eccentricity targets).
    pub observed: Distance,
    pub failures: Vec<String>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            write!(f, "PASS observed {}", self.observed)
        } else {
            write!(f, "FAIL {}", self.failures.join("; "))
        }
    }
}

impl GadgetOutput {
    pub fn check(&self, cap: usize) -> Result<Verdict> {
        verify_gadget(&self.graph, &self.sidecar, cap)
    }
}

/// Recomputes the promised quantity with the exact oracle.
pub fn verify_gadget(g: &Graph, sidecar: &Sidecar, cap: usize) -> Result<Verdict> {
    let m = all_pairs_capped(g, cap)?;
    let mut failures = Vec::new();
    let promise = sidecar.promise();
    let observed = match sidecar.target {
        Target::Radius(v) | Target::Diameter(v) => {
            v.check(g)?;
            let r = eccentricities_from_matrix(&m, v);
            let value = if matches!(sidecar.target, Target::Radius(_)) {
                r.radius
            } else {
                r.diameter
            };
            if !promise.holds(value) {
                failures.push(format!("{} is {value}, promised {promise}", sidecar.target));
            }
            value
        }
        Target::Median => {
            let (_, sum) = median_from_matrix(&m);
            if !promise.holds(sum) {
                failures.push(format!("median sum is {sum}, promised {promise}"));
            }
            sum
        }
        Target::Eccentricity(v) => {
            v.check(g)?;
            let r = eccentricities_from_matrix(&m, v);
            let ecc = |x: usize| -> Result<Distance> {
                r.ecc
                    .get(x)
                    .copied()
                    .ok_or_else(|| Error::input(format!("probe vertex {x} out of range")))
            };
            let mut worst = Distance::ZERO;
            for p in &sidecar.probes {
                let e = ecc(p.vertex)?;
                worst = worst.max(e);
                let want = if p.answer { sidecar.yes_value } else { sidecar.no_bound };
                if !want.holds(e) {
                    failures.push(format!("ecc({}) is {e}, promised {want}", p.vertex));
                }
            }
            for &(x, want) in &sidecar.anchors {
                let e = ecc(x)?;
                if e != want {
                    failures.push(format!("ecc({x}) is {e}, promised = {want}"));
                }
            }
            worst
        }
    };
    if sidecar.is_dag && topological_order(g).is_err() {
        failures.push("graph flagged as a DAG has a cycle".into());
    }
    Ok(Verdict {
        pass: failures.is_empty(),
        observed,
        failures,
    })
}

/// Accumulates vertices and arcs of a gadget.
#[derive(Debug, Default)]
pub(crate) struct Builder {
    n: usize,
    edges: Vec<(usize, usize, u64)>,
}

impl Builder {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub(crate) fn vertices(&mut self, k: usize) -> Vec<usize> {
        (0..k).map(|_| self.vertex()).collect()
    }

    pub(crate) fn arc(&mut self, u: usize, v: usize) {
        self.edges.push((u, v, 1));
    }

    pub(crate) fn arc_w(&mut self, u: usize, v: usize, w: u64) {
        self.edges.push((u, v, w));
    }

    /// Arcs `path[0] -> path[1] -> ...`.
    pub(crate) fn path(&mut self, path: &[usize]) {
        for w in path.windows(2) {
            self.arc(w[0], w[1]);
        }
    }

    pub(crate) fn finish(self, undirected: bool) -> Graph {
        Graph::new(self.n, self.edges, undirected).expect("gadget edges are valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::Finite;

    #[test]
    fn sidecar_json_round_trip() {
        let s = Sidecar {
            gadget: "all-ecc".into(),
            target: Target::Eccentricity(Variant::Undirected),
            answer: true,
            yes_value: Promise::Exact(Finite(5)),
            no_bound: Promise::AtLeast(Distance::Infinite),
            probes: vec![Probe {
                vertex: 0,
                answer: false,
            }],
            anchors: vec![(3, Finite(4))],
            is_dag: false,
            witness_map: WitnessMap {
                a: vec![Some(0), None],
                b: vec![],
            },
        };
        let text = s.to_json();
        let back = Sidecar::from_json(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json(), text);
        assert!(text.contains("\"eccentricity\": \"undirected\""));
    }

    #[test]
    fn promises() {
        assert!(Promise::Exact(Finite(4)).holds(Finite(4)));
        assert!(!Promise::Exact(Finite(4)).holds(Finite(5)));
        assert!(Promise::AtLeast(Finite(8)).holds(Distance::Infinite));
        assert!(!Promise::AtLeast(Finite(8)).holds(Finite(7)));
    }

    #[test]
    fn verify_detects_tampering() {
        let mut b = Builder::new();
        let v = b.vertices(3);
        b.path(&v);
        let g = b.finish(true);
        let mut s = Sidecar {
            gadget: "path".into(),
            target: Target::Radius(Variant::Undirected),
            answer: true,
            yes_value: Promise::Exact(Finite(1)),
            no_bound: Promise::AtLeast(Finite(2)),
            probes: vec![],
            anchors: vec![],
            is_dag: false,
            witness_map: WitnessMap::default(),
        };
        assert!(verify_gadget(&g, &s, 100).unwrap().pass);
        s.yes_value = Promise::Exact(Finite(2));
        let v = verify_gadget(&g, &s, 100).unwrap();
        assert!(!v.pass);
        assert_eq!(v.observed, Finite(1));
    }
}
