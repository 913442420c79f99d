//! The `mono` command line: argument parsing, command dispatch and reports.
//!
//! Exit codes: 0 success or property holds, 1 a checked property fails or a
//! hypothesis is not met, 2 malformed input.

pub mod cli;
pub mod commands;
pub mod input;
pub mod report;

use std::ffi::OsString;
use std::fmt;

use clap::Parser;
use mono_core::{Exec, Limits, MonoError};

use crate::cli::Cli;
use crate::report::Report;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(MonoError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<MonoError> for CliError {
    fn from(e: MonoError) -> Self {
        CliError::Core(e)
    }
}

/// A finished command: its report and exit code.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub code: i32,
}

impl Outcome {
    pub fn new(report: Report, ok: bool) -> Outcome {
        Outcome {
            report,
            code: if ok { 0 } else { 1 },
        }
    }
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct Context {
    pub exec: Exec,
    pub seed: u64,
    pub limits: Limits,
}

fn seed_from_env() -> Result<u64, CliError> {
    match std::env::var("MONO_SEED") {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("MONO_SEED: not an unsigned integer: {raw:?}"))),
        Err(_) => Ok(0),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let seed = match cli.seed {
        Some(s) => s,
        None => seed_from_env()?,
    };
    let limits = Limits::from_env()?;
    let exec = if cli.jobs > 1 { Exec::Parallel } else { Exec::Sequential };
    let ctx = Context { exec, seed, limits };
    if exec == Exec::Parallel {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build()
            .map_err(|e| CliError::Input(format!("--jobs: {e}")))?;
        pool.install(|| commands::dispatch(&ctx, &cli.command))
    } else {
        commands::dispatch(&ctx, &cli.command)
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit code, stdout text and stderr text.
pub fn main_with<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                (0, text, String::new())
            } else {
                let line = text.lines().next().unwrap_or("invalid arguments").to_string();
                (2, String::new(), format!("{line}\n"))
            };
        }
    };
    match run(&cli) {
        Ok(outcome) => (outcome.code, outcome.report.render(cli.format), String::new()),
        Err(e) => (2, String::new(), format!("mono: {e}\n")),
    }
}
