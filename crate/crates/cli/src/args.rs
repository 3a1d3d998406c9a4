// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use ecclab_core::{Variant, DEFAULT_CAP};

use crate::{CliError, Command, Format, RunSpec};

#[derive(Parser, Debug)]
#[command(name = "ecclab", version, about = "Radius, diameter and eccentricity toolkit")]
pub struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Write a generated graph (and sidecar / decomposition) to --output.
    Gen {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        shape: GenShape,
    },
    /// Exact eccentricities (or the median with --algorithm median).
    Exact {
        #[command(flatten)]
        common: Common,
    },
    /// Run an approximation algorithm.
    Approx {
        #[command(flatten)]
        common: Common,
    },
    /// Exact eccentricities through a tree decomposition.
    Tw {
        #[command(flatten)]
        common: Common,
        /// PACE .td file; a min-degree heuristic is used when absent.
        #[arg(long)]
        td: Option<PathBuf>,
    },
    /// Decide diameter (or radius) 2 vs 3 through the hashing reduction.
    Reduce {
        #[command(flatten)]
        common: Common,
    },
    /// Check a graph against its sidecar, or tw against the oracle.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Sidecar JSON; defaults to the input path with extension .json.
        #[arg(long)]
        sidecar: Option<PathBuf>,
        #[arg(long)]
        td: Option<PathBuf>,
    },
    /// Time algorithms on generated workloads and print TSV rows.
    Bench {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_parser = parse_variant)]
    variant: Option<Variant>,
    #[arg(long, visible_alias = "kind")]
    algorithm: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output format; json by default, tsv for bench.
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Extra parameter as key=value; repeatable.
    #[arg(long = "param", value_parser = parse_kv)]
    params: Vec<(String, String)>,
}

/// Shorthand flags for `gen`, equivalent to `--param key=value`.
#[derive(Args, Debug)]
struct GenShape {
    #[arg(long = "nA")]
    n_a: Option<usize>,
    #[arg(long = "nB")]
    n_b: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    size: Option<usize>,
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: ecclab_core::Error| e.to_string())
}

fn parse_kv(s: &str) -> Result<(String, String), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got {s:?}"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

impl Cli {
    pub fn into_run_spec(self) -> Result<RunSpec, CliError> {
        let (command, common, mut extra) = match self.command {
            Sub::Gen { common, shape } => {
                let pairs = [
                    ("nA", shape.n_a.map(|x| x.to_string())),
                    ("nB", shape.n_b.map(|x| x.to_string())),
                    ("d", shape.d.map(|x| x.to_string())),
                    ("p", shape.p.map(|x| x.to_string())),
                    ("t", shape.t.map(|x| x.to_string())),
                    ("n", shape.n.map(|x| x.to_string())),
                    ("k", shape.k.map(|x| x.to_string())),
                    ("m", shape.m.map(|x| x.to_string())),
                    ("size", shape.size.map(|x| x.to_string())),
                ];
                let extra = pairs
                    .into_iter()
                    .filter_map(|(k, v)| Some((k.to_string(), v?)))
                    .collect();
                (Command::Gen, common, extra)
            }
            Sub::Exact { common } => (Command::Exact, common, Vec::new()),
            Sub::Approx { common } => (Command::Approx, common, Vec::new()),
            Sub::Tw { common, td } => (Command::Tw, common, path_param("td", td)),
            Sub::Reduce { common } => (Command::Reduce, common, Vec::new()),
            Sub::Verify { common, sidecar, td } => {
                let mut extra = path_param("sidecar", sidecar);
                extra.extend(path_param("td", td));
                (Command::Verify, common, extra)
            }
            Sub::Bench { common } => (Command::Bench, common, Vec::new()),
        };
        let mut params = BTreeMap::new();
        extra.extend(common.params);
        for (k, v) in extra {
            if params.insert(k.clone(), v).is_some() {
                return Err(CliError::Usage(format!("parameter {k:?} given twice")));
            }
        }
        Ok(RunSpec {
            command,
            input: common.input,
            output: common.output,
            variant: common.variant,
            algorithm: common.algorithm,
            seed: common.seed,
            params,
            format: common.format.unwrap_or(if command == Command::Bench {
                Format::Tsv
            } else {
                Format::Json
            }),
            cap: common.cap,
        })
    }
}

fn path_param(key: &str, p: Option<PathBuf>) -> Vec<(String, String)> {
    p.map(|p| (key.to_string(), p.display().to_string()))
        .into_iter()
        .collect()
}
