// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::path::{Path, PathBuf};

use ecclab_core::approx::{
    approx_min_diameter_dag, approx_min_diameter_with, approx_min_radius_dag, approx_source_radius_with,
    finite_min_eccentricities, trivial_metric_estimate, ApproxResult, Ratio, DEFAULT_HITTING_C,
};
use ecclab_core::generate::{random_dag, random_digraph};
use ecclab_core::hardness::{
    build_dg, default_t, gadget_all_eccentricities, gadget_max_radius, gadget_median, gadget_min_diameter_dag,
    gadget_min_diameter_weighted, gadget_min_radius_dag, gadget_radius_23, gadget_roundtrip_diameter,
    gadget_roundtrip_radius_with, gadget_source_radius, gadget_undirected_diameter_23, random_set_system,
    reduce_decision23_to_set_system, verify_gadget, Decision23, GadgetOutput, Mode, RoundtripStyle, SetSystemInstance,
    Sidecar, Target, DEFAULT_ROUNDS,
};
use ecclab_core::oracle::{all_pairs_capped, exact_eccentricities_capped, median_from_matrix};
use ecclab_core::rng::substream;
use ecclab_core::treewidth::{generate_partial_ktree, min_degree_decomposition, tw_eccentricities, TreeDecomposition};
use ecclab_core::{EccentricityReport, Graph, Variant};
use serde_json::json;

use crate::{emit, read, write, CliError, Format, Outcome, RunSpec};

const HSE_KINDS: [&str; 6] = [
    "roundtrip-radius",
    "radius-23",
    "source-radius",
    "max-radius",
    "min-radius-dag",
    "median",
];
const OV_KINDS: [&str; 5] = [
    "min-diameter-dag",
    "min-diameter-weighted",
    "diameter-23",
    "roundtrip-diameter",
    "all-ecc",
];
const OTHER_KINDS: [&str; 4] = ["partial-ktree", "dg", "random-digraph", "random-dag"];

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn load_graph(spec: &RunSpec) -> Result<Graph, CliError> {
    let path = spec.input()?;
    Graph::parse(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_td(path: &Path) -> Result<TreeDecomposition, CliError> {
    TreeDecomposition::parse_pace(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn default_variant(spec: &RunSpec, g: &Graph) -> Variant {
    spec.variant.unwrap_or(if g.is_undirected() {
        Variant::Undirected
    } else {
        Variant::Source
    })
}

fn sibling(path: &Path, ext: &str) -> PathBuf {
    path.with_extension(ext)
}

fn report_text(r: &EccentricityReport, format: Format) -> String {
    match format {
        Format::Json => r.to_json() + "\n",
        Format::Tsv => r.to_tsv(),
    }
}

fn kv_tsv(rows: &[(&str, String)]) -> String {
    let mut s = String::from("key\tvalue\n");
    for (k, v) in rows {
        s.push_str(&format!("{k}\t{v}\n"));
    }
    s
}

pub(crate) fn gen(spec: &RunSpec, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let kind = spec.algorithm.as_deref().ok_or_else(|| usage("gen needs --kind"))?;
    let path = spec.output.as_deref().ok_or_else(|| usage("gen needs --output"))?;
    if matches!(path.extension().and_then(|e| e.to_str()), Some("json" | "td" | "sets")) {
        return Err(usage("gen --output must not end in .json, .td or .sets"));
    }
    let mut rng = substream(spec.seed, &format!("gen.{kind}"));
    let summary = match kind {
        "partial-ktree" => {
            let (n, k) = (spec.get("n", 100)?, spec.get("k", 3)?);
            let (g, td) = generate_partial_ktree(n, k, spec.get("keep", 0.8)?, &mut rng)?;
            write(path, &g.to_text())?;
            write(&sibling(path, "td"), &td.to_pace(n))?;
            format!("partial-ktree n={} m={} width={}", g.n(), g.m(), td.width())
        }
        "dg" => {
            let (size, t) = (spec.get("size", 8)?, spec.get("t", 1)?);
            let f = build_dg(size, t)?;
            write(path, &f.graph.to_text())?;
            format!(
                "dg n={} m={} size={size} t={t} pair_bound={}",
                f.graph.n(),
                f.graph.m(),
                t + 1
            )
        }
        "random-digraph" | "random-dag" => {
            let n = spec.get("n", 100)?;
            let (m, w) = (spec.get("m", 4 * n)?, spec.get("w", 1)?);
            let g = if kind == "random-dag" {
                random_dag(n, m, w, &mut rng)
            } else {
                random_digraph(n, m, w, &mut rng)
            };
            write(path, &g.to_text())?;
            format!("{kind} n={} m={}", g.n(), g.m())
        }
        _ => {
            let mode = if HSE_KINDS.contains(&kind) {
                Mode::Hse
            } else if OV_KINDS.contains(&kind) {
                Mode::Ov
            } else {
                let all: Vec<&str> = HSE_KINDS.iter().chain(&OV_KINDS).chain(&OTHER_KINDS).copied().collect();
                return Err(usage(format!("unknown generator {kind:?} (known: {})", all.join(", "))));
            };
            let inst = match &spec.input {
                Some(p) => SetSystemInstance::parse(&read(p)?)
                    .map_err(|e| usage(format!("{}: {e}", p.display())))?
                    .with_mode(mode),
                None => {
                    let (na, nb, d) = (spec.get("nA", 8)?, spec.get("nB", 8)?, spec.get("d", 4)?);
                    let p = spec.get("p", 0.5)?;
                    if !(0.0..=1.0).contains(&p) {
                        return Err(usage("p must lie in [0, 1]"));
                    }
                    random_set_system(na, nb, d, p, mode, &mut substream(spec.seed, "gen.instance"))
                }
            };
            let g = build_gadget(kind, &inst, spec)?;
            write(path, &g.graph.to_text())?;
            write(&sibling(path, "json"), &(g.sidecar.to_json() + "\n"))?;
            write(&sibling(path, "sets"), &inst.to_text())?;
            if let Some(td) = &g.pathwidth_witness {
                write(&sibling(path, "td"), &td.to_pace(g.graph.n()))?;
            }
            let s = &g.sidecar;
            format!(
                "{kind} n={} m={} answer={} yes_value {}, no_bound {}",
                g.graph.n(),
                g.graph.m(),
                if s.answer { "yes" } else { "no" },
                s.yes_value,
                s.no_bound
            )
        }
    };
    writeln!(out, "{summary}")?;
    Ok(Outcome::Pass)
}

fn build_gadget(kind: &str, inst: &SetSystemInstance, spec: &RunSpec) -> Result<GadgetOutput, CliError> {
    let t = spec.get_opt::<usize>("t")?;
    let ht = t.unwrap_or_else(|| default_t(inst));
    Ok(match kind {
        "roundtrip-radius" => {
            let style = match spec.params.get("style").map(String::as_str) {
                None | Some("weighted") => RoundtripStyle::Weighted,
                Some("subdivided") => RoundtripStyle::Subdivided,
                Some(s) => return Err(usage(format!("unknown style {s:?} (weighted, subdivided)"))),
            };
            gadget_roundtrip_radius_with(inst, style)?
        }
        "radius-23" => gadget_radius_23(inst)?,
        "source-radius" => gadget_source_radius(inst, ht)?,
        "max-radius" => gadget_max_radius(inst, ht)?,
        "min-radius-dag" => gadget_min_radius_dag(inst, ht)?,
        "median" => gadget_median(inst)?,
        "min-diameter-dag" => gadget_min_diameter_dag(inst)?,
        "min-diameter-weighted" => gadget_min_diameter_weighted(inst, t.unwrap_or(2))?,
        "diameter-23" => gadget_undirected_diameter_23(inst)?,
        "roundtrip-diameter" => gadget_roundtrip_diameter(inst)?,
        "all-ecc" => gadget_all_eccentricities(inst)?,
        _ => unreachable!("kind checked by caller"),
    })
}

pub(crate) fn exact(spec: &RunSpec, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let g = load_graph(spec)?;
    let text = match spec.algorithm.as_deref() {
        None | Some("ecc") => {
            let r = exact_eccentricities_capped(&g, default_variant(spec, &g), spec.cap)?;
            report_text(&r, spec.format)
        }
        Some("median") => {
            let (v, sum) = median_from_matrix(&all_pairs_capped(&g, spec.cap)?);
            match spec.format {
                Format::Json => format!("{:#}\n", json!({ "median": v, "sum": sum })),
                Format::Tsv => kv_tsv(&[("median", v.to_string()), ("sum", sum.to_string())]),
            }
        }
        Some(a) => return Err(usage(format!("unknown exact algorithm {a:?} (ecc, median)"))),
    };
    emit(spec, out, &text)?;
    Ok(Outcome::Pass)
}

fn parse_ratio(s: &str) -> Result<Ratio, CliError> {
    let bad = || usage(format!("eps={s:?}: expected p/q"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    Ok(Ratio { num, den })
}

fn approx_text(r: &ApproxResult, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("result serializes") + "\n",
        Format::Tsv => kv_tsv(&[
            ("quantity", format!("{:?}", r.quantity).to_lowercase()),
            ("estimate", r.estimate.to_string()),
            (
                "witness_center",
                r.witness_center.map_or(String::new(), |c| c.to_string()),
            ),
            ("lower", r.guarantee.0.to_string()),
            ("upper", r.guarantee.1.to_string()),
            ("whp", r.whp.to_string()),
        ]),
    }
}

pub(crate) fn approx(spec: &RunSpec, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let g = load_graph(spec)?;
    let alg = spec
        .algorithm
        .as_deref()
        .ok_or_else(|| usage("approx needs --algorithm"))?;
    let mut rng = substream(spec.seed, &format!("approx.{alg}"));
    let c = spec.get("c", DEFAULT_HITTING_C)?;
    let result = match alg {
        "source-radius" => approx_source_radius_with(&g, c, &mut rng)?,
        "min-radius-dag" => approx_min_radius_dag(&g)?,
        "min-diameter-dag" => approx_min_diameter_dag(&g)?,
        "min-diameter" => {
            let eps = parse_ratio(spec.params.get("eps").map_or("1/2", String::as_str))?;
            approx_min_diameter_with(&g, eps, c, &mut rng)?
        }
        "trivial" => trivial_metric_estimate(&g, default_variant(spec, &g), spec.get("probe", 0)?)?,
        "finite-min-ecc" => {
            let f = finite_min_eccentricities(&g);
            let text = match spec.format {
                Format::Json => serde_json::to_string(&f).expect("bools serialize") + "\n",
                Format::Tsv => {
                    let mut s = String::from("vertex\tfinite\n");
                    for (v, x) in f.iter().enumerate() {
                        s.push_str(&format!("{v}\t{x}\n"));
                    }
                    s
                }
            };
            emit(spec, out, &text)?;
            return Ok(Outcome::Pass);
        }
        a => {
            return Err(usage(format!(
                "unknown approx algorithm {a:?} (source-radius, min-radius-dag, min-diameter-dag, \
                 min-diameter, trivial, finite-min-ecc)"
            )))
        }
    };
    emit(spec, out, &approx_text(&result, spec.format))?;
    Ok(Outcome::Pass)
}

pub(crate) fn tw(spec: &RunSpec, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let g = load_graph(spec)?;
    let td = match spec.params.get("td") {
        Some(p) => load_td(Path::new(p))?,
        None => min_degree_decomposition(&g),
    };
    let r = tw_eccentricities(&g, &td, default_variant(spec, &g))?;
    emit(spec, out, &report_text(&r, spec.format))?;
    Ok(Outcome::Pass)
}

pub(crate) fn reduce(spec: &RunSpec, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let g = load_graph(spec)?;
    let target = match spec.algorithm.as_deref() {
        None | Some("diameter") => Decision23::Diameter,
        Some("radius") => Decision23::Radius,
        Some(a) => return Err(usage(format!("unknown reduce target {a:?} (diameter, radius)"))),
    };
    let delta = spec.get("delta", ((g.n() as f64).sqrt().ceil() as usize).max(1))?;
    let rounds = spec.get("rounds", DEFAULT_ROUNDS)?;
    let mut rng = substream(spec.seed, "reduce");
    let value = reduce_decision23_to_set_system(&g, target, delta, rounds, &mut rng)?;
    let name = if target == Decision23::Diameter {
        "diameter"
    } else {
        "radius"
    };
    let text = match spec.format {
        Format::Json => format!("{:#}\n", json!({ "target": name, "value": value })),
        Format::Tsv => kv_tsv(&[("target", name.into()), ("value", value.to_string())]),
    };
    emit(spec, out, &text)?;
    Ok(Outcome::Pass)
}

pub(crate) fn verify(spec: &RunSpec, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let input = spec.input()?;
    let g = load_graph(spec)?;
    let td = spec.params.get("td").map(|p| load_td(Path::new(p))).transpose()?;
    let sidecar_path = spec
        .params
        .get("sidecar")
        .map(PathBuf::from)
        .unwrap_or_else(|| sibling(input, "json"));
    let mut lines = Vec::new();
    let mut pass = true;
    if sidecar_path.exists() {
        let side = Sidecar::from_json(&read(&sidecar_path)?)?;
        let verdict = verify_gadget(&g, &side, spec.cap)?;
        pass &= verdict.pass;
        lines.push(format!(
            "{} {} {}: observed {}, promised {}",
            if verdict.pass { "PASS" } else { "FAIL" },
            side.gadget,
            side.target,
            verdict.observed,
            side.promise()
        ));
        lines.extend(verdict.failures.iter().map(|f| format!("  {f}")));
        if let (Some(td), Target::Radius(v) | Target::Diameter(v)) = (&td, side.target) {
            let r = tw_eccentricities(&g, td, v)?;
            let value = if matches!(side.target, Target::Radius(_)) {
                r.radius
            } else {
                r.diameter
            };
            let ok = value == verdict.observed;
            pass &= ok;
            lines.push(format!(
                "{} tw {}: tw {value}, oracle {}",
                if ok { "PASS" } else { "FAIL" },
                side.target,
                verdict.observed
            ));
        }
    } else if let Some(td) = &td {
        td.validate(&g)?;
        let variants: Vec<Variant> = match spec.variant {
            Some(v) => vec![v],
            None => Variant::ALL
                .into_iter()
                .filter(|&v| g.is_undirected() || v != Variant::Undirected)
                .collect(),
        };
        for v in variants {
            let got = tw_eccentricities(&g, td, v)?;
            let want = exact_eccentricities_capped(&g, v, spec.cap)?;
            match (0..g.n()).find(|&i| got.ecc[i] != want.ecc[i]) {
                None => lines.push(format!("PASS tw {v}: radius {} diameter {}", got.radius, got.diameter)),
                Some(i) => {
                    pass = false;
                    lines.push(format!(
                        "FAIL tw {v}: ecc({i}) tw {} oracle {}",
                        got.ecc[i], want.ecc[i]
                    ));
                }
            }
        }
    } else {
        return Err(usage(format!("missing sidecar {}", sidecar_path.display())));
    }
    let mut text = lines.join("\n");
    text.push('\n');
    emit(spec, out, &text)?;
    Ok(if pass { Outcome::Pass } else { Outcome::Fail })
}
