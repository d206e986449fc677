use num_complex::Complex64;
use serde::Serialize;

use calderon::inverse::{Direction, StopReason, DEFAULT_EPS, DEFAULT_MAX_ITER, DEFAULT_TOL};

pub const DEFAULT_N_MODES: usize = 10;
pub const DEFAULT_CURVE_GRID: usize = 1024;

/// `[re, im]`.
pub type Pair = [f64; 2];

pub fn pair(z: Complex64) -> Pair {
    [z.re, z.im]
}

#[derive(Debug, Clone, Serialize)]
pub struct Defaults {
    pub n_modes: usize,
    pub grid: usize,
    pub eps: f64,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for Defaults {
    fn default() -> Self {
        Self {
            n_modes: DEFAULT_N_MODES,
            grid: DEFAULT_CURVE_GRID,
            eps: DEFAULT_EPS,
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvertSettings {
    pub n_max: usize,
    pub grid: usize,
    pub eps: f64,
    pub tol: f64,
    pub max_iter: usize,
    pub init: String,
    pub direction: Direction,
    pub proximity: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Alignment {
    pub alpha: Pair,
    pub shift: Pair,
    pub distance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub load_s: f64,
    pub solve_s: f64,
    pub total_s: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvertReport {
    pub subspace_dim: usize,
    pub degenerate_basis: bool,
    pub residual_history: Vec<f64>,
    pub converged: bool,
    pub iterations: usize,
    pub stop_reason: StopReason,
    pub is_simple: bool,
    pub wrong_solution: bool,
    pub intersection_count: usize,
    pub speed_deviation: f64,
    pub gamma_hat: Vec<Pair>,
    pub alignment: Option<Alignment>,
    pub timings: Timings,
    pub settings: InvertSettings,
    pub defaults: Defaults,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidateReport {
    pub n_max: usize,
    pub kind: calderon::MatrixKind,
    pub row0_max: f64,
    pub col0_max: f64,
    pub self_adjoint_defect: f64,
    pub involution_band: usize,
    pub involution_defect: f64,
    pub max_imag: f64,
    pub eps: f64,
    pub subspace_dim: Option<usize>,
    pub subspace_error: Option<String>,
    pub smallest_singular_values: Vec<f64>,
    pub defaults: Defaults,
}
