//! Command-line front end for the `boubaker` solver.

pub mod commands;
pub mod error;
pub mod output;
pub mod problem_file;
pub mod reproduce;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use boubaker::projection::{ProjectionRegistry, ProjectionScheme};
use boubaker::solver::SolveOptions;
use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::MatrixFormat;
use crate::error::{CliError, Result};
use crate::reproduce::{Context, TargetRegistry};

#[derive(Debug, Parser)]
#[command(name = "boubaker", version, about = "Boubaker collocation for fractional Emden-Fowler problems")]
pub struct Cli {
    /// Projection scheme used for the fractional operational matrix.
    #[arg(long, global = true, default_value = "legendre")]
    pub projection: String,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the coefficient matrix M and the basis polynomials.
    Basis {
        #[arg(long)]
        n: usize,
        /// Print even when N is past the conditioning limit.
        #[arg(long)]
        force: bool,
    },
    /// Print the operational matrix D^(alpha).
    Opmatrix {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Solve a problem file and write solution.csv, coefficients.csv and report.txt.
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Regenerate a published table and compare it cell by cell.
    Reproduce {
        /// table1, table2, unknowns, table3, fig3-data or all
        #[arg(long, default_value = "all")]
        target: String,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Check zero rows, integer-order exactness and orthogonality of D^(alpha).
    OracleCheck {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

impl From<Format> for MatrixFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => MatrixFormat::Text,
            Format::Csv => MatrixFormat::Csv,
        }
    }
}

fn scheme(name: &str) -> Result<std::sync::Arc<dyn ProjectionScheme>> {
    ProjectionRegistry::with_defaults()
        .get(name)
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::io("<stdout>", e))
}

/// Runs one command, writing its report to `out`. A failed oracle check
/// returns exit code 1 after printing the report.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<ExitCode> {
    let scheme = scheme(&cli.projection)?;
    match cli.command {
        Command::Basis { n, force } => emit(out, &commands::basis_report(n, force)?)?,
        Command::Opmatrix { alpha, n, format } => {
            emit(out, &commands::opmatrix_report(alpha, n, format.into(), scheme.as_ref())?)?
        }
        Command::Solve { file, out: dir } => {
            let run = commands::solve_file(&file, &dir, scheme.as_ref())?;
            emit(out, &run.summary)?;
        }
        Command::Reproduce { target, out: dir } => {
            let registry = TargetRegistry::with_defaults();
            let ctx = Context {
                scheme,
                options: SolveOptions::default(),
            };
            for outcome in reproduce::reproduce(&registry, &target, &ctx, &dir)? {
                emit(out, &outcome.summary())?;
            }
        }
        Command::OracleCheck { alpha, n } => {
            let check = commands::oracle_check(alpha, n, scheme.as_ref())?;
            emit(out, &check.text)?;
            if !check.passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
