// SPDX-License-Identifier: Apache-2.0

//! Command-line front end: argument parsing, file I/O and the experiment
//! harness around `ecclab-core`.

mod args;
mod bench;
mod commands;

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use ecclab_core::Variant;

pub use args::Cli;
pub use bench::BenchRow;

/// Subcommand of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Gen,
    Exact,
    Approx,
    Tw,
    Reduce,
    Verify,
    Bench,
}

impl Command {
    /// Keys accepted in `--param key=value`.
    pub fn param_keys(self) -> &'static [&'static str] {
        match self {
            Command::Gen => &["nA", "nB", "d", "p", "t", "n", "k", "m", "w", "keep", "size", "style"],
            Command::Exact => &[],
            Command::Approx => &["eps", "c", "probe"],
            Command::Tw => &["td"],
            Command::Reduce => &["delta", "rounds"],
            Command::Verify => &["sidecar", "td"],
            Command::Bench => &["sizes", "ks", "reps", "oracle_max"],
        }
    }
}

/// Output encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

/// One fully specified invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct RunSpec {
    pub command: Command,
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub variant: Option<Variant>,
    pub algorithm: Option<String>,
    pub seed: u64,
    pub params: BTreeMap<String, String>,
    pub format: Format,
    /// Vertex cap for quadratic-memory oracle calls.
    pub cap: usize,
}

impl RunSpec {
    pub fn new(command: Command) -> Self {
        RunSpec {
            command,
            input: None,
            output: None,
            variant: None,
            algorithm: None,
            seed: 0,
            params: BTreeMap::new(),
            format: Format::Json,
            cap: ecclab_core::DEFAULT_CAP,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// Rejects parameter keys the command does not know.
    pub fn check_params(&self) -> Result<(), CliError> {
        let known = self.command.param_keys();
        match self.params.keys().find(|k| !known.contains(&k.as_str())) {
            Some(k) => Err(CliError::Usage(format!(
                "unknown parameter {k:?} for {:?} (known: {})",
                self.command,
                known.join(", ")
            ))),
            None => Ok(()),
        }
    }

    pub(crate) fn get<T: FromStr>(&self, key: &str, default: T) -> Result<T, CliError>
    where
        T::Err: fmt::Display,
    {
        Ok(self.get_opt(key)?.unwrap_or(default))
    }

    pub(crate) fn get_opt<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError>
    where
        T::Err: fmt::Display,
    {
        self.params
            .get(key)
            .map(|s| {
                s.parse()
                    .map_err(|e| CliError::Usage(format!("parameter {key}={s:?}: {e}")))
            })
            .transpose()
    }

    pub(crate) fn input(&self) -> Result<&Path, CliError> {
        self.input
            .as_deref()
            .ok_or_else(|| CliError::Usage(format!("{:?} needs --input", self.command)))
    }
}

/// Result of a successful run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// A verification mismatch.
    Fail,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unusable inputs.
    Usage(String),
    /// The oracle would exceed its vertex cap.
    Capacity(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Capacity(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ecclab_core::Error> for CliError {
    fn from(e: ecclab_core::Error) -> Self {
        match e {
            ecclab_core::Error::Capacity { .. } => CliError::Capacity(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Process exit code: 0 pass, 1 verification failure, 2 usage, 3 capacity.
pub fn exit_code(result: &Result<Outcome, CliError>) -> i32 {
    match result {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(CliError::Usage(_)) => 2,
        Err(CliError::Capacity(_)) => 3,
    }
}

/// Executes a run; printed output goes to `out` unless `--output` names a file.
pub fn run(spec: &RunSpec, out: &mut dyn Write) -> Result<Outcome, CliError> {
    spec.check_params()?;
    match spec.command {
        Command::Gen => commands::gen(spec, out),
        Command::Exact => commands::exact(spec, out),
        Command::Approx => commands::approx(spec, out),
        Command::Tw => commands::tw(spec, out),
        Command::Reduce => commands::reduce(spec, out),
        Command::Verify => commands::verify(spec, out),
        Command::Bench => bench::bench(spec, out),
    }
}

/// Caps the global rayon pool at `ECCLAB_THREADS` when set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("ECCLAB_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .map_err(|_| CliError::Usage(format!("ECCLAB_THREADS={v:?} is not a number")))?;
    // A pool that is already built (e.g. in tests) keeps its size.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

pub(crate) fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub(crate) fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Writes `text` to `--output` if given, else to `out`.
pub(crate) fn emit(spec: &RunSpec, out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match &spec.output {
        Some(p) => write(p, text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}
