//! Command-line front end: config loading, command dispatch and report
//! emission for `supdeform-core`.
//!
//! Exit codes: 0 success, 1 axiom or consistency failure, 2 configuration error.

pub mod commands;
pub mod config;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use supdeform_core::axiomlab::FError;
use supdeform_core::brackets::BracketError;
use supdeform_core::homology::HomologyError;
use thiserror::Error;

pub use commands::Outcome;
pub use config::{load_config, parse_config, ConfigError, ExtensionChoice, OutputFormat, RunConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{0} needs --config")]
    MissingConfig(Command),
    #[error(transparent)]
    Grid(#[from] FError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::MissingConfig(_) | CliError::Grid(_) => 2,
            CliError::Bracket(_) | CliError::Homology(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Parse and check a config, report dφ and the extension subalgebra
    Validate,
    /// Check super symmetry and super Jacobi on all generator pairs/triples
    Axioms,
    /// Dump chain bases and boundary matrices
    Chain,
    /// Betti numbers as piecewise functions of t
    Betti,
    /// Solve for admissible deformation functions F
    Ffamily,
    /// Check the deformed Schouten bracket axioms
    Schouten,
}

impl std::fmt::Display for Command {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "supdeform", version, about = "Deformed Lie superalgebras of forms and their weighted homology")]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    pub command: Command,
    /// Run configuration file
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Weights to compute (overrides the config); repeatable
    #[arg(long = "weight", num_args = 1.., allow_negative_numbers = true)]
    pub weights: Vec<i64>,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Grid bound N for ffamily: conditions on a+b <= N
    #[arg(long, default_value_t = 8)]
    pub grid: usize,
    /// Jacobi conditions for closed φ (default)
    #[arg(long, conflicts_with = "nonclosed")]
    pub closed: bool,
    /// Jacobi conditions for non-closed φ
    #[arg(long)]
    pub nonclosed: bool,
}

/// Runs one invocation.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = match &cli.config {
        Some(path) => Some(load_config(path)?),
        None => None,
    };
    let format = match (cli.format, &cfg) {
        (Some(FormatArg::Json), _) => OutputFormat::Json,
        (Some(FormatArg::Text), _) => OutputFormat::Text,
        (None, Some(cfg)) => cfg.format,
        (None, None) => OutputFormat::Text,
    };
    if cli.command == Command::Ffamily {
        return commands::cmd_ffamily(!cli.nonclosed, cli.grid, format);
    }
    let cfg = cfg.ok_or(CliError::MissingConfig(cli.command))?;
    let weights = if cli.weights.is_empty() { cfg.weights.clone() } else { cli.weights.clone() };
    match cli.command {
        Command::Validate => commands::cmd_validate(&cfg, format),
        Command::Axioms => commands::cmd_axioms(&cfg, format),
        Command::Chain => commands::cmd_chain(&cfg, &weights, format),
        Command::Betti => commands::cmd_betti(&cfg, &weights, format),
        Command::Schouten => commands::cmd_schouten(&cfg, format),
        Command::Ffamily => unreachable!("handled above"),
    }
}
