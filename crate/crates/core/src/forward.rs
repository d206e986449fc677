//! Hilbert-transform and DtN matrices of a domain given by a conformal map.
//!
//! For `Φ` biholomorphic from the unit disk onto the domain, the DtN map in
//! the angle variable is `a·Λ_disk` with `a = 1/|Φ'(e^{iθ})|`. Switching to
//! arc length `s(θ)` (with `ds/dθ = |Φ'|`) and applying `D⁻¹ = (-i d/ds)⁻¹`,
//! the factor `a` cancels against `ds/dθ`, so
//!
//! ```text
//! (H f)(s(θ)) = disk_hilbert(f ∘ s)(θ) + const
//! ```
//!
//! The constant makes the result zero-mean with respect to `ds`. Coefficients
//! in `s` are read off by the substitution `ds = |Φ'| dθ`, so `s(θ)` is never
//! inverted.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::curve::{find_self_intersections, DEFAULT_PROXIMITY, DEFAULT_SIMPLICITY_GRID};
use crate::error::{Error, Result};
use crate::fourier::{
    antiderivative, coeffs_from_samples, disk_dtn, samples_from_coeffs, FourierCoefficients,
    SampledFunction, DEFAULT_MEAN_TOL,
};
use crate::matrix::{MatrixKind, SpectralMatrix};

/// Smallest admissible `|Φ'|` on the boundary grid.
pub const MIN_SPEED: f64 = 1e-8;

/// Default forward grid: `max(1024, 32N)`, rounded up to a power of two.
pub fn default_forward_grid(n_max: usize) -> usize {
    (32 * n_max).max(1024).next_power_of_two()
}

/// `Φ(z) = c·Σ a_k z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConformalMap {
    poly: Vec<Complex64>,
    scale: f64,
}

impl ConformalMap {
    /// Map with coefficients `a_0, a_1, …` and scale 1.
    pub fn new(poly: Vec<Complex64>) -> Result<Self> {
        let degree = poly.iter().rposition(|c| c.norm() > 0.0).unwrap_or(0);
        if degree == 0 {
            return Err(Error::Parameter("polynomial map must have degree >= 1".into()));
        }
        let mut poly = poly;
        poly.truncate(degree + 1);
        Ok(Self { poly, scale: 1.0 })
    }

    pub fn from_real(poly: &[f64]) -> Result<Self> {
        Self::new(poly.iter().map(|&a| Complex64::new(a, 0.0)).collect())
    }

    pub fn with_scale(mut self, scale: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::Parameter(format!("scale must be positive, got {scale}")));
        }
        self.scale = scale;
        Ok(self)
    }

    pub fn poly(&self) -> &[Complex64] {
        &self.poly
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn degree(&self) -> usize {
        self.poly.len() - 1
    }

    /// `Φ(z)`, including the scale.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.scale * self.poly.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a)
    }

    /// `Φ'(z)`, including the scale.
    pub fn derivative(&self, z: Complex64) -> Complex64 {
        let d = self
            .poly
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (k, a)| acc * z + a * k as f64);
        self.scale * d
    }
}

/// `|Φ'(e^{iθ_j})|` on the grid.
pub fn boundary_speed(map: &ConformalMap, grid_size: usize) -> Result<SampledFunction> {
    let speed: Vec<f64> = crate::fourier::grid_points(grid_size)
        .map(|t| map.derivative(Complex64::from_polar(1.0, t)).norm())
        .collect();
    let min_speed = speed.iter().copied().fold(f64::INFINITY, f64::min);
    if !(min_speed >= MIN_SPEED) {
        return Err(Error::DegenerateImmersion {
            min_speed,
            threshold: MIN_SPEED,
        });
    }
    SampledFunction::from_real(speed)
}

/// Rescales the map so its boundary has length 2π.
///
/// Any scale already on `map` is discarded.
pub fn normalize_length(map: &ConformalMap, grid_size: usize) -> Result<ConformalMap> {
    let raw = map.clone().with_scale(1.0)?;
    let mean = boundary_speed(&raw, grid_size)?.mean().re;
    raw.with_scale(1.0 / mean)
}

/// Arc length as a function of the disk angle.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryParametrization {
    speed: Vec<f64>,
    s_of_theta: Vec<f64>,
}

impl BoundaryParametrization {
    pub fn grid_size(&self) -> usize {
        self.speed.len()
    }

    /// `ds/dθ` at the grid angles.
    pub fn speed(&self) -> &[f64] {
        &self.speed
    }

    /// `s(θ_j)`, starting at `s(0) = 0`.
    pub fn s_of_theta(&self) -> &[f64] {
        &self.s_of_theta
    }

    pub fn total_length(&self) -> f64 {
        2.0 * PI * self.speed.iter().sum::<f64>() / self.speed.len() as f64
    }

    /// Parametrization of the unit circle itself, `s = θ`.
    pub fn disk(grid_size: usize) -> Self {
        Self {
            speed: vec![1.0; grid_size],
            s_of_theta: crate::fourier::grid_points(grid_size).collect(),
        }
    }

    /// Weighted analysis `(1/M) Σ_j G_j |Φ'_j| e^{-in s_j}`, which discretises
    /// `(1/2π)∫ G e^{-ins} ds`.
    fn analyse_in_arclength(&self, samples: &[Complex64], n_max: usize) -> FourierCoefficients {
        let m = self.grid_size() as f64;
        let mut out = vec![Complex64::new(0.0, 0.0); 2 * n_max + 1];
        for ((g, &w), &s) in samples.iter().zip(&self.speed).zip(&self.s_of_theta) {
            let step = Complex64::from_polar(1.0, -s);
            let mut phase = Complex64::from_polar(1.0, n_max as f64 * s);
            let weighted = g * (w / m);
            for slot in out.iter_mut() {
                *slot += weighted * phase;
                phase *= step;
            }
        }
        FourierCoefficients::new(n_max, out).expect("length 2N+1")
    }

    /// `f(s(θ_j))` for `f` given by arc-length coefficients.
    fn pull_back(&self, f: &FourierCoefficients) -> Vec<Complex64> {
        self.s_of_theta.iter().map(|&s| f.eval(s)).collect()
    }
}

/// Arc-length profile `s(θ) = θ·mean(|Φ'|) + periodic part`.
///
/// The periodic part is the spectral antiderivative of `|Φ'| − mean`, shifted
/// so that `s(0) = 0`.
pub fn arclength_profile(map: &ConformalMap, grid_size: usize) -> Result<BoundaryParametrization> {
    let speed_fn = boundary_speed(map, grid_size)?;
    let mean = speed_fn.mean().re;
    let centered = SampledFunction::new(
        speed_fn.values().iter().map(|v| v - mean).collect(),
    )?;
    let bandwidth = grid_size / 2 - 1;
    let spec = coeffs_from_samples(&centered, bandwidth)?;
    // d/dθ = iD, so the θ-antiderivative is -i·D⁻¹.
    let periodic_coeffs = antiderivative(&spec, 1e-10 * mean.max(1.0))?.scale(Complex64::new(0.0, -1.0));
    let periodic = samples_from_coeffs(&periodic_coeffs, grid_size)?;
    let p0 = periodic.values()[0].re;
    let s_of_theta: Vec<f64> = crate::fourier::grid_points(grid_size)
        .zip(periodic.values())
        .map(|(t, p)| t * mean + p.re - p0)
        .collect();
    if s_of_theta.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::ForwardConsistency("arc length is not strictly increasing".into()));
    }
    let speed = speed_fn.values().iter().map(|v| v.re).collect();
    Ok(BoundaryParametrization { speed, s_of_theta })
}

/// Applies the domain's Hilbert transform to `f`, both in arc-length
/// coefficients. The output has the same `n_max` as `f`.
pub fn hilbert_apply(param: &BoundaryParametrization, f: &FourierCoefficients) -> Result<FourierCoefficients> {
    let length = param.total_length();
    if (length - 2.0 * PI).abs() > 1e-8 {
        return Err(Error::Parameter(format!(
            "boundary length {length} is not 2π; normalise the map first"
        )));
    }
    let m = param.grid_size();
    let bandwidth = m / 2 - 1;
    let pulled = SampledFunction::new(param.pull_back(f))?;
    let spec = coeffs_from_samples(&pulled, bandwidth)?;
    let dtn = disk_dtn(&spec);
    let hilbert = antiderivative(&dtn, DEFAULT_MEAN_TOL)
        .map_err(|e| Error::ForwardConsistency(format!("disk DtN output: {e}")))?;
    let mut g = samples_from_coeffs(&hilbert, m)?.into_values();

    let weight: f64 = param.speed.iter().sum();
    let mean: Complex64 = g.iter().zip(&param.speed).map(|(v, w)| v * w).sum::<Complex64>() / weight;
    for v in &mut g {
        *v -= mean;
    }
    Ok(param.analyse_in_arclength(&g, f.n_max()))
}

/// Arc-length Fourier coefficients of the boundary curve `Φ(e^{iθ(s)})`.
pub fn boundary_coefficients(
    map: &ConformalMap,
    param: &BoundaryParametrization,
    n_max: usize,
) -> FourierCoefficients {
    let samples: Vec<Complex64> = crate::fourier::grid_points(param.grid_size())
        .map(|t| map.eval(Complex64::from_polar(1.0, t)))
        .collect();
    param.analyse_in_arclength(&samples, n_max)
}

/// Rejects maps whose boundary image is not a simple curve.
pub fn check_simple_boundary(map: &ConformalMap) -> Result<()> {
    let param = arclength_profile(map, DEFAULT_SIMPLICITY_GRID)?;
    let points: Vec<Complex64> = crate::fourier::grid_points(DEFAULT_SIMPLICITY_GRID)
        .map(|t| map.eval(Complex64::from_polar(1.0, t)))
        .collect();
    let report = find_self_intersections(&points, param.s_of_theta(), param.total_length(), DEFAULT_PROXIMITY);
    if report.simple {
        Ok(())
    } else {
        Err(Error::NonSimpleBoundary { witnesses: report.count })
    }
}

/// A length-normalised map together with its Hilbert matrix.
#[derive(Debug, Clone)]
pub struct ForwardResult {
    pub map: ConformalMap,
    pub param: BoundaryParametrization,
    pub matrix: SpectralMatrix,
}

impl ForwardResult {
    pub fn min_speed(&self) -> f64 {
        self.param.speed.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn boundary_coefficients(&self, n_max: usize) -> FourierCoefficients {
        boundary_coefficients(&self.map, &self.param, n_max)
    }
}

/// Normalises `map`, checks its boundary is simple, and builds `H^(N)`.
///
/// Column `m` holds the arc-length coefficients of `H e^{ims}`.
pub fn forward(map: &ConformalMap, n_max: usize, grid_size: usize) -> Result<ForwardResult> {
    if grid_size < 4 * n_max + 4 {
        return Err(Error::Parameter(format!(
            "forward grid {grid_size} too small for n_max = {n_max}"
        )));
    }
    let map = normalize_length(map, grid_size)?;
    check_simple_boundary(&map)?;
    let param = arclength_profile(&map, grid_size)?;
    let columns = (-(n_max as i64)..=n_max as i64)
        .map(|m| {
            if m == 0 {
                Ok(FourierCoefficients::zeros(n_max))
            } else {
                hilbert_apply(&param, &FourierCoefficients::mode(n_max, m))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let matrix = SpectralMatrix::from_columns(MatrixKind::Hilbert, &columns)?;
    Ok(ForwardResult { map, param, matrix })
}

/// `H^(N)` of the domain `Φ(𝔻)`; see [`forward`].
pub fn build_hilbert_matrix(map: &ConformalMap, n_max: usize, grid_size: usize) -> Result<SpectralMatrix> {
    Ok(forward(map, n_max, grid_size)?.matrix)
}

/// `λ_{mn} = m·h_{mn}`.
pub fn dtn_from_hilbert(h: &SpectralMatrix) -> SpectralMatrix {
    h.to_dtn()
}
