use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::residual::{objective, objective_and_gradient, real_jacobian};
use super::subspace::{near_fixed_subspace, SubspaceBasis};
use crate::curve::{self, SimplicityReport, DEFAULT_PROXIMITY, DEFAULT_SIMPLICITY_GRID};
use crate::error::{Error, Result};
use crate::fourier::FourierCoefficients;
use crate::matrix::SpectralMatrix;

pub const DEFAULT_EPS: f64 = 0.1;
pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 200;

/// Below this fraction of `‖ĝ‖`, `ĝ_1` is treated as zero and the phase is
/// left alone.
const PHASE_FLOOR: f64 = 1e-10;

/// Starting point of the descent.
#[derive(Debug, Clone, PartialEq)]
pub enum Init {
    /// The first basis vector.
    E1,
    /// Explicit `W`-coordinates; missing trailing coordinates are zero.
    Coords(Vec<Complex64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Minimum-norm least-squares step on the linearised residual.
    GaussNewton,
    /// `−∂F/∂c̄`.
    Steepest,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub eps: f64,
    pub tol: f64,
    pub max_iter: usize,
    pub init: Init,
    pub initial_step: f64,
    pub shrink: f64,
    pub sufficient_decrease: f64,
    pub min_step: f64,
    pub direction: Direction,
    pub grid_size: usize,
    pub proximity: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            eps: DEFAULT_EPS,
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
            init: Init::E1,
            initial_step: 1.0,
            shrink: 0.5,
            sufficient_decrease: 1e-4,
            min_step: 1e-12,
            direction: Direction::GaussNewton,
            grid_size: DEFAULT_SIMPLICITY_GRID,
            proximity: DEFAULT_PROXIMITY,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::Parameter(what.to_string()));
        if !(self.eps > 0.0) {
            return bad("eps must be positive");
        }
        if !(self.tol > 0.0) {
            return bad("tol must be positive");
        }
        if self.max_iter == 0 {
            return bad("max_iter must be at least 1");
        }
        if !(self.initial_step > 0.0) || !(self.min_step > 0.0) || self.min_step > self.initial_step {
            return bad("need 0 < min_step <= initial_step");
        }
        if !(self.shrink > 0.0 && self.shrink < 1.0) {
            return bad("shrink must lie in (0, 1)");
        }
        if !(self.sufficient_decrease > 0.0 && self.sufficient_decrease < 1.0) {
            return bad("sufficient_decrease must lie in (0, 1)");
        }
        if !(self.proximity > 0.0) {
            return bad("proximity must be positive");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    Converged,
    MaxIterations,
    LineSearchStalled,
}

#[derive(Debug, Clone)]
pub struct ReconstructionResult {
    /// Normalised so that `ĝ_0 = 0` and `ĝ_1 ≥ 0`.
    pub gamma_hat: FourierCoefficients,
    pub coords: Vec<Complex64>,
    /// Objective at the starting point and after every accepted step.
    pub residual_history: Vec<f64>,
    pub subspace_dim: usize,
    pub degenerate: bool,
    pub converged: bool,
    pub iterations: usize,
    pub stop_reason: StopReason,
    pub simplicity: SimplicityReport,
    pub is_simple: bool,
    pub speed_deviation: f64,
}

impl ReconstructionResult {
    pub fn objective(&self) -> f64 {
        *self.residual_history.last().expect("history is never empty")
    }

    /// A unit-speed fixed point whose curve is not simple.
    pub fn wrong_solution(&self) -> bool {
        self.converged && !self.is_simple
    }
}

fn initial_coords(basis: &SubspaceBasis, init: &Init) -> Result<Vec<Complex64>> {
    let l = basis.dim();
    let zero = Complex64::new(0.0, 0.0);
    match init {
        Init::E1 if !basis.is_degenerate() => {
            let mut c = vec![zero; l];
            c[0] = Complex64::new(1.0, 0.0);
            Ok(c)
        }
        // Orthonormal basis: project the mode e^{is} onto W.
        Init::E1 => {
            let c: Vec<Complex64> = basis.vectors().iter().map(|e| e[1].conj()).collect();
            if c.iter().all(|x| x.norm() < 1e-12) {
                let mut c = vec![zero; l];
                c[0] = Complex64::new(1.0, 0.0);
                return Ok(c);
            }
            Ok(c)
        }
        Init::Coords(v) => {
            if v.is_empty() || v.len() > l {
                return Err(Error::Parameter(format!(
                    "init has {} coordinates, subspace dimension is {l}",
                    v.len()
                )));
            }
            let mut c = v.clone();
            c.resize(l, zero);
            Ok(c)
        }
    }
}

fn to_real(c: &[Complex64]) -> DVector<f64> {
    DVector::from_iterator(2 * c.len(), c.iter().map(|z| z.re).chain(c.iter().map(|z| z.im)))
}

fn to_complex(x: &DVector<f64>) -> Vec<Complex64> {
    let l = x.len() / 2;
    (0..l).map(|k| Complex64::new(x[k], x[l + k])).collect()
}

/// Search direction in real coordinates and the real gradient of `F`.
fn direction(basis: &SubspaceBasis, coords: &[Complex64], kind: Direction) -> (DVector<f64>, DVector<f64>) {
    let (_, wirtinger) = objective_and_gradient(basis, coords);
    let grad = 2.0 * to_real(&wirtinger);
    let steepest = -0.5 * &grad;
    if kind == Direction::Steepest {
        return (steepest, grad);
    }
    let (r, j) = real_jacobian(basis, coords);
    let svd = j.svd(true, true);
    let cutoff = 1e-12 * svd.singular_values.max();
    match svd.solve(&(-r), cutoff) {
        Ok(d) if d.iter().all(|x| x.is_finite()) && grad.dot(&d) < 0.0 => (d, grad),
        _ => (steepest, grad),
    }
}

/// Rotates coordinates so that the first positive coefficient is real and
/// non-negative. Leaves `F` unchanged.
fn normalize_phase(basis: &SubspaceBasis, coords: &mut [Complex64]) {
    let g = basis.combine(coords);
    let g1 = g[1];
    if g1.norm() > PHASE_FLOOR * g.norm() {
        let rot = g1.conj() / g1.norm();
        coords.iter_mut().for_each(|c| *c *= rot);
    }
}

/// Backtracking descent on `F` in the coordinates of `basis`.
pub fn descend(basis: &SubspaceBasis, config: &SolverConfig) -> Result<ReconstructionResult> {
    config.validate()?;
    let mut coords = initial_coords(basis, &config.init)?;
    normalize_phase(basis, &mut coords);
    let mut f = objective(&basis.combine(&coords));
    let mut history = vec![f];
    let mut stop = StopReason::MaxIterations;
    let mut iterations = 0;

    while iterations < config.max_iter {
        if f <= config.tol {
            stop = StopReason::Converged;
            break;
        }
        let (d, grad) = direction(basis, &coords, config.direction);
        let slope = grad.dot(&d);
        if !(slope < 0.0) {
            stop = StopReason::LineSearchStalled;
            break;
        }
        let x = to_real(&coords);
        let mut eta = config.initial_step;
        let mut accepted = None;
        while eta >= config.min_step {
            let trial = to_complex(&(&x + eta * &d));
            let ft = objective(&basis.combine(&trial));
            if ft <= f + config.sufficient_decrease * eta * slope {
                accepted = Some((trial, ft));
                break;
            }
            eta *= config.shrink;
        }
        let Some((next, fn_)) = accepted else {
            stop = StopReason::LineSearchStalled;
            break;
        };
        coords = next;
        normalize_phase(basis, &mut coords);
        f = fn_;
        history.push(f);
        iterations += 1;
        log::debug!("iteration {iterations}: F = {f:.3e}, step {eta:.1e}");
    }
    if f <= config.tol {
        stop = StopReason::Converged;
    }

    let mut gamma_hat = basis.combine(&coords);
    let g1 = gamma_hat[1];
    if g1.norm() > PHASE_FLOOR * gamma_hat.norm() {
        let rot = g1.conj() / g1.norm();
        gamma_hat = gamma_hat.scale(rot);
        // the product can keep an ulp of imaginary part
        gamma_hat[1] = Complex64::new(g1.norm(), 0.0);
        coords.iter_mut().for_each(|c| *c *= rot);
    }
    let simplicity = curve::is_simple(&gamma_hat, config.grid_size, config.proximity)?;
    let speed_deviation = curve::speed_deviation(&gamma_hat, config.grid_size)?;
    Ok(ReconstructionResult {
        gamma_hat,
        coords,
        residual_history: history,
        subspace_dim: basis.dim(),
        degenerate: basis.is_degenerate(),
        converged: stop == StopReason::Converged,
        iterations,
        stop_reason: stop,
        is_simple: simplicity.simple,
        simplicity,
        speed_deviation,
    })
}

/// Extracts the near-fixed subspace of `h` and descends in it.
pub fn reconstruct(h: &SpectralMatrix, config: &SolverConfig) -> Result<ReconstructionResult> {
    config.validate()?;
    let basis = near_fixed_subspace(h, config.eps)?;
    let result = descend(&basis, config)?;
    if result.wrong_solution() {
        log::warn!("converged to a non-simple curve; try another init");
    }
    Ok(result)
}
