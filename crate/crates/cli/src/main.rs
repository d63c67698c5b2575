//! `arbor`: sample, check, color and balance trees, and run the Monte Carlo
//! experiments.
//!
//! Exit status is 0 on success, 2 when the input or flags are rejected and
//! 1 when a construction breaks its own invariant. In the last case the
//! offending tree is written to stderr.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "arbor", version, about = "Balanced and equitable colorings of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Draw uniform random labeled trees.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long, env = "ARBOR_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Emit::Edges)]
        emit: Emit,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Describe a tree file: degrees, pre-leaves, balance.
    Check {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Build (or verify) an equitable k-coloring of a tree.
    Color {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Two pre-leaves that must get different colors (k = 3 only).
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        constrain: Option<Vec<usize>>,
        /// Check the coloring in FILE instead of building one.
        #[arg(long, value_name = "FILE")]
        verify: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact balance of a sequence or of a tree's degree sequence.
    Balance {
        /// Comma-separated positive integers.
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        seq: Option<String>,
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
    },
    /// Monte Carlo experiment over random labeled trees.
    Experiment {
        #[arg(value_enum)]
        kind: Experiment,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, env = "ARBOR_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List every labeled tree on n vertices (n <= 8).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = Emit::Prufer)]
        emit: Emit,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Edges,
    Prufer,
    Stats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Experiment {
    Balanced,
    Equitable,
    Degrees,
    Maxdeg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("arbor: {e}");
            if let commands::CliError::Internal { tree: Some(t), .. } = &e {
                eprintln!("offending tree:\n{t}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
