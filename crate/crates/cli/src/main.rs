use std::process::ExitCode;

use calderon_cli::commands::{self, InvertOptions};
use calderon_cli::{Cli, Command};
use clap::Parser;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Forward { poly, n_modes, grid, out } => commands::forward(poly, *n_modes, *grid, out).map(|s| {
            println!("length scale c = {:.17e}", s.length_scale);
            println!("min boundary speed = {:.6e}", s.min_speed);
        }),
        Command::Invert { matrix, eps, tol, max_iter, init, reference, grid, out, report } => {
            commands::invert(&InvertOptions {
                matrix,
                eps: *eps,
                tol: *tol,
                max_iter: *max_iter,
                init,
                reference: reference.as_deref(),
                grid: *grid,
                out,
                report,
            })
            .map(|r| {
                println!(
                    "L = {}, iterations = {}, F = {:.3e}, converged = {}, simple = {}",
                    r.subspace_dim,
                    r.iterations,
                    r.residual_history.last().copied().unwrap_or(f64::NAN),
                    r.converged,
                    r.is_simple
                );
                if r.wrong_solution {
                    println!("wrong solution: the curve intersects itself; retry with another --init");
                }
                if let Some(a) = &r.alignment {
                    println!("aligned distance to reference = {:.3e}", a.distance);
                }
            })
        }
        Command::Validate { matrix, eps, report } => commands::validate(matrix, *eps, report.as_deref()).map(|_| ()),
        Command::Plot { curve, out, mode } => commands::plot(curve, out, *mode),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
