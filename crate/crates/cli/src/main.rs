//! `setcount`: command-line front end for the exact-arithmetic workbench.
//!
//! Exit codes: 0 on success, 2 for usage and precondition errors, 1 when an
//! internal consistency check fails.

mod cmd;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "setcount",
    version,
    about = "Exact diagonal, subset, density and chain computations"
)]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Seed for the randomized families.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Antidiagonals and membership scans over explicit or rule-generated arrays.
    Diagonal(cmd::diagonal::Args),
    /// Binomial tables and enumeration of finite subsets of the naturals.
    Subsets {
        #[command(subcommand)]
        command: cmd::subsets::Command,
    },
    /// Interim-count ratios, the correction factor and the fraction grid.
    Density {
        #[command(subcommand)]
        command: cmd::density::Command,
    },
    /// Parse and classify proof-by-contradiction chains.
    Chains {
        #[command(subcommand)]
        command: cmd::chains::Command,
    },
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad input or a violated precondition.
    Usage(String),
    /// A result failed its own consistency check.
    Internal(String),
}

impl CliError {
    pub fn usage(e: impl std::fmt::Display) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult = Result<String, CliError>;

fn run(cli: Cli) -> CliResult {
    let ctx = cmd::Context {
        format: cli.format,
        seed: cli.seed,
    };
    match cli.command {
        Command::Diagonal(args) => cmd::diagonal::run(&ctx, args),
        Command::Subsets { command } => cmd::subsets::run(&ctx, command),
        Command::Density { command } => cmd::density::run(&ctx, command),
        Command::Chains { command } => cmd::chains::run(&ctx, command),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    match run(cli) {
        Ok(text) => {
            let written = match output {
                Some(path) => fs::write(&path, text.as_bytes())
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => io::stdout()
                    .lock()
                    .write_all(text.as_bytes())
                    .map_err(|e| format!("cannot write output: {e}")),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(2)
                }
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
