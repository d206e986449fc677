//! Command-line front end for the `calderon` library.

// `!(x > 0.0)` is how parameter checks reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod parse;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Exit status for bad input (flags, files).
pub const EXIT_INPUT: u8 = 2;
/// Exit status for numerical failure.
pub const EXIT_NUMERICAL: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Numerical(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) | CliError::Numerical(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Numerical(_) => EXIT_NUMERICAL,
        }
    }
}

impl From<calderon::Error> for CliError {
    fn from(e: calderon::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Numerical(e.to_string())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "calderon", version, about = "Hilbert-transform matrices of planar domains and boundary reconstruction")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotMode {
    Curve,
    Velocity,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the Hilbert matrix of the domain bounded by a polynomial map's image.
    Forward {
        /// Polynomial coefficients a_0,a_1,… of Φ(z) = Σ a_k z^k, e.g. "0,6,0.5-0.7i,0,1".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = report::DEFAULT_N_MODES)]
        n_modes: usize,
        /// Quadrature grid on the circle [default: max(1024, 32·n_modes) rounded to a power of two].
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Reconstruct the boundary curve from a matrix file.
    Invert {
        matrix: PathBuf,
        #[arg(long, default_value_t = calderon::inverse::DEFAULT_EPS)]
        eps: f64,
        #[arg(long, default_value_t = calderon::inverse::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = calderon::inverse::DEFAULT_MAX_ITER)]
        max_iter: usize,
        /// "e1" or comma-separated subspace coordinates, e.g. "1,1,1.64".
        #[arg(long, default_value = "e1", allow_hyphen_values = true)]
        init: String,
        /// Polynomial of the true map; adds the alignment distance to the report.
        #[arg(long, allow_hyphen_values = true)]
        reference: Option<String>,
        /// Number of curve samples written.
        #[arg(long, default_value_t = report::DEFAULT_CURVE_GRID)]
        grid: usize,
        /// Curve output (CSV).
        #[arg(long)]
        out: PathBuf,
        /// Report output (JSON).
        #[arg(long)]
        report: PathBuf,
    },
    /// Report structural diagnostics of a matrix file.
    Validate {
        matrix: PathBuf,
        #[arg(long, default_value_t = calderon::inverse::DEFAULT_EPS)]
        eps: f64,
        /// Report output (JSON); printed to stdout when absent.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Render a curve file as SVG.
    Plot {
        curve: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = PlotMode::Curve)]
        mode: PlotMode,
    },
}
