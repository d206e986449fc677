use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use calderon::curve::{evaluate, velocity};
use calderon::forward::{arclength_profile, boundary_coefficients, default_forward_grid, normalize_length};
use calderon::fourier::{coeffs_from_samples, SampledFunction};
use calderon::io::{curve_svg, read_curve, read_matrix, write_curve, write_matrix, MIN_CURVE_ROWS};
use calderon::{align, forward as build, near_fixed_subspace, reconstruct, ConformalMap, Init, SolverConfig};

use crate::parse;
use crate::report::{pair, Alignment, Defaults, InvertReport, InvertSettings, Timings, ValidateReport};
use crate::{CliError, PlotMode};

type Result<T> = std::result::Result<T, CliError>;

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| input(format!("cannot write {}: {e}", path.display())))
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| input(format!("cannot read {}: {e}", path.display())))
}

fn parse_map(poly: &str) -> Result<ConformalMap> {
    let coeffs = parse::complex_list(poly).map_err(|e| input(format!("--poly: {e}")))?;
    Ok(ConformalMap::new(coeffs)?)
}

pub struct ForwardSummary {
    pub length_scale: f64,
    pub min_speed: f64,
}

pub fn forward(poly: &str, n_modes: usize, grid: Option<usize>, out: &Path) -> Result<ForwardSummary> {
    if n_modes == 0 {
        return Err(input("--n-modes must be at least 1"));
    }
    let map = parse_map(poly)?;
    let grid = grid.unwrap_or_else(|| default_forward_grid(n_modes));
    let result = build(&map, n_modes, grid)?;
    let mut w = create(out)?;
    write_matrix(&result.matrix, &mut w)?;
    w.flush()?;
    Ok(ForwardSummary {
        length_scale: result.map.scale(),
        min_speed: result.min_speed(),
    })
}

pub struct InvertOptions<'a> {
    pub matrix: &'a Path,
    pub eps: f64,
    pub tol: f64,
    pub max_iter: usize,
    pub init: &'a str,
    pub reference: Option<&'a str>,
    pub grid: usize,
    pub out: &'a Path,
    pub report: &'a Path,
}

fn parse_init(text: &str) -> Result<Init> {
    if text.trim().eq_ignore_ascii_case("e1") {
        return Ok(Init::E1);
    }
    parse::complex_list(text)
        .map(Init::Coords)
        .map_err(|e| input(format!("--init: {e}")))
}

pub fn invert(opts: &InvertOptions) -> Result<InvertReport> {
    let start = Instant::now();
    let h = read_matrix(open(opts.matrix)?)?;
    let loaded = start.elapsed().as_secs_f64();
    let n_max = h.n_max();
    if opts.grid < MIN_CURVE_ROWS.max(2 * n_max + 2) {
        return Err(input(format!("--grid must be at least {}", MIN_CURVE_ROWS.max(2 * n_max + 2))));
    }
    let reference = opts.reference.map(parse_map).transpose()?;
    let config = SolverConfig {
        eps: opts.eps,
        tol: opts.tol,
        max_iter: opts.max_iter,
        init: parse_init(opts.init)?,
        ..SolverConfig::default()
    };

    let solve_start = Instant::now();
    let r = reconstruct(&h, &config)?;
    let solved = solve_start.elapsed().as_secs_f64();

    let alignment = match reference {
        Some(map) => {
            let grid = default_forward_grid(n_max);
            let map = normalize_length(&map, grid)?;
            let param = arclength_profile(&map, grid)?;
            let truth = boundary_coefficients(&map, &param, n_max);
            let (t, distance) = align(&truth, &r.gamma_hat);
            Some(Alignment {
                alpha: pair(t.alpha),
                shift: pair(t.shift),
                distance,
            })
        }
        None => None,
    };

    let curve = evaluate(&r.gamma_hat, opts.grid)?;
    let mut w = create(opts.out)?;
    write_curve(&curve, &mut w)?;
    w.flush()?;

    let report = InvertReport {
        subspace_dim: r.subspace_dim,
        degenerate_basis: r.degenerate,
        residual_history: r.residual_history.clone(),
        converged: r.converged,
        iterations: r.iterations,
        stop_reason: r.stop_reason,
        is_simple: r.is_simple,
        wrong_solution: r.wrong_solution(),
        intersection_count: r.simplicity.count,
        speed_deviation: r.speed_deviation,
        gamma_hat: r.gamma_hat.as_slice().iter().copied().map(pair).collect(),
        alignment,
        timings: Timings {
            load_s: loaded,
            solve_s: solved,
            total_s: start.elapsed().as_secs_f64(),
        },
        settings: InvertSettings {
            n_max,
            grid: opts.grid,
            eps: config.eps,
            tol: config.tol,
            max_iter: config.max_iter,
            init: opts.init.to_string(),
            direction: config.direction,
            proximity: config.proximity,
        },
        defaults: Defaults::default(),
    };
    let mut w = create(opts.report)?;
    serde_json::to_writer_pretty(&mut w, &report).map_err(|e| input(e.to_string()))?;
    writeln!(w)?;
    w.flush()?;
    Ok(report)
}

pub fn validate(matrix: &Path, eps: f64, out: Option<&Path>) -> Result<ValidateReport> {
    if !(eps > 0.0) {
        return Err(input("--eps must be positive"));
    }
    let h = read_matrix(open(matrix)?)?.to_hilbert();
    let (row0_max, col0_max) = h.structural_zero_defect();
    let band = (h.n_max() / 2).max(1);
    let (subspace_dim, subspace_error, smallest) = match near_fixed_subspace(&h, eps) {
        Ok(w) => (Some(w.dim()), None, w.singular_values().iter().take(h.n_max() + 1).copied().collect()),
        Err(e) => (None, Some(e.to_string()), Vec::new()),
    };
    let report = ValidateReport {
        n_max: h.n_max(),
        kind: h.kind(),
        row0_max,
        col0_max,
        self_adjoint_defect: h.self_adjoint_defect(),
        involution_band: band,
        involution_defect: h.involution_defect(band),
        max_imag: h.max_imag(),
        eps,
        subspace_dim,
        subspace_error,
        smallest_singular_values: smallest,
        defaults: Defaults::default(),
    };
    let text = serde_json::to_string_pretty(&report).map_err(|e| input(e.to_string()))?;
    match out {
        Some(path) => {
            let mut w = create(path)?;
            writeln!(w, "{text}")?;
            w.flush()?;
        }
        None => println!("{text}"),
    }
    Ok(report)
}

pub fn plot(curve: &Path, out: &Path, mode: PlotMode) -> Result<()> {
    let c = read_curve(open(curve)?)?;
    let points = match mode {
        PlotMode::Curve => c.points().to_vec(),
        PlotMode::Velocity => {
            let m = c.len();
            let g = coeffs_from_samples(&SampledFunction::new(c.points().to_vec())?, m / 2 - 1)?;
            evaluate(&velocity(&g), m)?.points().to_vec()
        }
    };
    let mut w = create(out)?;
    w.write_all(curve_svg(&points).as_bytes())?;
    w.flush()?;
    Ok(())
}
