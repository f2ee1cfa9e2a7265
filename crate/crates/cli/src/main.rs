//! `spectral-transfer`: batch front end for the spectral workbench.
//!
//! Exit codes: 0 success, 1 output failure, 2 input or usage error,
//! 3 solver error, 4 model not length-balanced, 5 degenerate mesh. Every
//! failure prints one `error[N]: …` line on standard error.

mod commands;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use spectral_transfer::linalg::DEFAULT_TOLERANCE;
use spectral_transfer::mesh::DEFAULT_BALANCE_FLOOR;

use crate::commands::Kind;
use crate::error::CliError;
use crate::output::Format;

#[derive(Parser)]
#[command(name = "spectral-transfer", version, about = "Spectra of covers, embedded graphs, metric graphs and meshes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Laplacian spectrum of an edge-list graph.
    Spectrum {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Normalized)]
        kind: Kind,
        /// Relative eigensolver tolerance.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        /// Fail with a solver error if the graph is disconnected.
        #[arg(long)]
        require_connected: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exactness, Gram identity and transfer inequality of a cover file.
    CoverCheck {
        input: PathBuf,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        kmax: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Normalized eigenvalue ratios of an embedded graph.
    GenusBound {
        /// Rotation-system JSON; omit when using --family.
        input: Option<PathBuf>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        kmax: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Lower bound, sandwich, stability and dilation reports for a metric graph model.
    Metric {
        input: PathBuf,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        kmax: u64,
        /// Refinement level of the Galerkin estimate (at least 1).
        #[arg(long, default_value_t = 3)]
        level: usize,
        /// Also check dilation by this factor.
        #[arg(long)]
        dilate: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Spectral bisection of a simplicial mesh.
    Partition {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BALANCE_FLOOR)]
        balance_floor: f64,
        /// First nonzero Neumann eigenvalue of the domain, for the diagnostic ratios.
        #[arg(long)]
        lambda1: Option<f64>,
        /// Report format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write `index side` lines here; the report goes to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Spectrum {
            input,
            kind,
            tol,
            require_connected,
            output,
        } => {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
            }
            commands::spectrum(&input, kind, tol, require_connected, output.format, output.out.as_deref())
        }
        Command::CoverCheck { input, kmax, output } => {
            commands::cover_check(&input, kmax as usize, output.format, output.out.as_deref())
        }
        Command::GenusBound {
            input,
            family,
            size,
            kmax,
            output,
        } => commands::genus_bound(
            input.as_deref(),
            family.as_deref(),
            size,
            kmax as usize,
            output.format,
            output.out.as_deref(),
        ),
        Command::Metric {
            input,
            kmax,
            level,
            dilate,
            output,
        } => commands::metric(&input, kmax as usize, level, dilate, output.format, output.out.as_deref()),
        Command::Partition {
            input,
            balance_floor,
            lambda1,
            format,
            out,
        } => {
            if let Some(l) = lambda1 {
                if !(l.is_finite() && l > 0.0) {
                    return Err(CliError::Usage(format!("--lambda1 must be positive, got {l}")));
                }
            }
            commands::partition(&input, balance_floor, lambda1, format, out.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            eprintln!("{}", CliError::Usage(first.to_string()).line());
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.line());
            ExitCode::from(e.code())
        }
    }
}
