// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::time::Instant;

use ecclab_core::approx::{
    approx_min_diameter, approx_min_diameter_dag, approx_min_radius_dag, approx_source_radius, Ratio,
};
use ecclab_core::generate::{random_connected, random_orientation, random_path_dag, random_strong_digraph};
use ecclab_core::oracle::exact_eccentricities_capped;
use ecclab_core::rng::substream;
use ecclab_core::treewidth::{generate_partial_ktree, tw_eccentricities};
use ecclab_core::{Distance, Graph, Variant};
use rayon::prelude::*;
use serde::Serialize;

use crate::{emit, CliError, Format, Outcome, RunSpec};

const ALGORITHMS: [&str; 6] = [
    "source-radius",
    "min-radius-dag",
    "min-diameter-dag",
    "min-diameter",
    "tw",
    "exact",
];

/// One timed cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    pub k: Option<usize>,
    pub wall_ms: f64,
    pub estimate: Distance,
    /// Exact value, when the graph is small enough for the oracle.
    pub oracle: Option<Distance>,
    /// `estimate / oracle`.
    pub ratio: Option<f64>,
}

impl BenchRow {
    pub fn tsv_header() -> &'static str {
        "algorithm\tn\tm\tk\twall_ms\testimate\toracle\tratio\n"
    }

    pub fn to_tsv(&self) -> String {
        let opt = |x: Option<String>| x.unwrap_or_default();
        format!(
            "{}\t{}\t{}\t{}\t{:.3}\t{}\t{}\t{}\n",
            self.algorithm,
            self.n,
            self.m,
            opt(self.k.map(|k| k.to_string())),
            self.wall_ms,
            self.estimate,
            opt(self.oracle.map(|d| d.to_string())),
            opt(self.ratio.map(|r| format!("{r:.4}")))
        )
    }
}

fn parse_list(spec: &RunSpec, key: &str, default: &str) -> Result<Vec<usize>, CliError> {
    let s = spec.params.get(key).map_or(default, String::as_str);
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse()
                .map_err(|_| CliError::Usage(format!("{key}: {x:?} is not a number")))
        })
        .collect()
}

fn ratio(estimate: Distance, truth: Distance) -> f64 {
    match (estimate, truth) {
        (Distance::Infinite, Distance::Infinite) => 1.0,
        (Distance::Finite(0), Distance::Finite(0)) => 1.0,
        (Distance::Finite(e), Distance::Finite(t)) if t > 0 => e as f64 / t as f64,
        _ => f64::INFINITY,
    }
}

struct Cell {
    n: usize,
    k: Option<usize>,
    rep: usize,
}

fn run_cell(alg: &str, cell: &Cell, spec: &RunSpec, oracle_max: usize) -> Result<BenchRow, CliError> {
    let n = cell.n;
    let k = cell.k.unwrap_or(0);
    let mut rng = substream(spec.seed, &format!("bench.{alg}.{n}.{k}.{}", cell.rep));
    let variant = spec.variant.unwrap_or(Variant::Undirected);
    let (g, td): (Graph, _) = match alg {
        "source-radius" | "min-diameter" => (random_strong_digraph(n, 3 * n, 1, &mut rng), None),
        "min-radius-dag" | "min-diameter-dag" => (random_path_dag(n, 3 * n, 1, &mut rng), None),
        "tw" => {
            let (g, td) = generate_partial_ktree(n, k, 1.0, &mut rng)?;
            let g = if variant == Variant::Undirected {
                g
            } else {
                random_orientation(&g, 1, &mut rng)
            };
            (g, Some(td))
        }
        _ => (random_connected(n, 2 * n, 1, &mut rng), None),
    };
    let start = Instant::now();
    let (estimate, truth_variant, radius) = match alg {
        "source-radius" => (approx_source_radius(&g, &mut rng)?.estimate, Variant::Source, true),
        "min-radius-dag" => (approx_min_radius_dag(&g)?.estimate, Variant::Min, true),
        "min-diameter-dag" => (approx_min_diameter_dag(&g)?.estimate, Variant::Min, false),
        "min-diameter" => (
            approx_min_diameter(&g, Ratio { num: 1, den: 2 }, &mut rng)?.estimate,
            Variant::Min,
            false,
        ),
        "tw" => (
            tw_eccentricities(&g, td.as_ref().expect("tw cells carry a decomposition"), variant)?.radius,
            variant,
            true,
        ),
        _ => (
            exact_eccentricities_capped(&g, Variant::Undirected, spec.cap)?.radius,
            Variant::Undirected,
            true,
        ),
    };
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let oracle = if n <= oracle_max {
        let r = exact_eccentricities_capped(&g, truth_variant, spec.cap)?;
        Some(if radius { r.radius } else { r.diameter })
    } else {
        None
    };
    Ok(BenchRow {
        algorithm: alg.to_string(),
        n: g.n(),
        m: g.m(),
        k: cell.k,
        wall_ms,
        estimate,
        oracle,
        ratio: oracle.map(|t| ratio(estimate, t)),
    })
}

pub(crate) fn bench(spec: &RunSpec, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let alg = spec.algorithm.as_deref().unwrap_or("source-radius");
    if !ALGORITHMS.contains(&alg) {
        return Err(CliError::Usage(format!(
            "unknown bench algorithm {alg:?} (known: {})",
            ALGORITHMS.join(", ")
        )));
    }
    let sizes = parse_list(spec, "sizes", "100,200,400")?;
    let ks: Vec<Option<usize>> = if alg == "tw" {
        parse_list(spec, "ks", "2,3,4")?.into_iter().map(Some).collect()
    } else {
        vec![None]
    };
    let reps = spec.get("reps", 1usize)?;
    let oracle_max = spec.get("oracle_max", 2000usize)?;
    let mut cells = Vec::new();
    for &n in &sizes {
        for &k in &ks {
            for rep in 0..reps {
                cells.push(Cell { n, k, rep });
            }
        }
    }
    // Collecting an indexed parallel iterator keeps cell order.
    let rows = cells
        .par_iter()
        .map(|c| run_cell(alg, c, spec, oracle_max))
        .collect::<Result<Vec<_>, _>>()?;
    let text = match spec.format {
        Format::Tsv => {
            let mut s = String::from(BenchRow::tsv_header());
            rows.iter().for_each(|r| s.push_str(&r.to_tsv()));
            s
        }
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
    };
    emit(spec, out, &text)?;
    Ok(Outcome::Pass)
}
