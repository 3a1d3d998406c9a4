// SPDX-License-Identifier: Apache-2.0

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use ecclab_cli::{configure_threads, exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = configure_threads()
        .and_then(|_| cli.into_run_spec())
        .and_then(|spec| run(&spec, &mut out));
    let _ = out.flush();
    if let Err(e) = &result {
        eprintln!("ecclab: {e}");
    }
    ExitCode::from(exit_code(&result) as u8)
}
