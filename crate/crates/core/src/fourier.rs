//! Trigonometric coefficient vectors and the Fourier multipliers acting on them.
//!
//! A 2π-periodic function is stored by its coefficients `ĝ_n`, `n = -N..=N`,
//! at array positions `0..=2N` (position `n + N`). Sampled functions live on
//! the uniform grid `θ_j = 2πj/M`.
//!
//! The three multipliers are
//!
//! | operator | symbol on `e^{inθ}` |
//! |----------|---------------------|
//! | [`differentiate`] (`D = -i d/ds`) | `n` |
//! | [`antiderivative`] (`D⁻¹` on zero-mean functions) | `1/n`, `0` at `n = 0` |
//! | [`disk_dtn`] (`Λ` of the unit disk) | `|n|` |
//!
//! together with [`disk_hilbert`], the sign multiplier, which satisfies
//! `Λ = D ∘ disk_hilbert`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};

/// Default tolerance on `|ĝ_0|` accepted by [`antiderivative`].
pub const DEFAULT_MEAN_TOL: f64 = 1e-8;

/// Complex Fourier coefficients `ĝ_{-N}, …, ĝ_N` of a 2π-periodic function.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoefficients {
    n_max: usize,
    coeffs: Vec<Complex64>,
}

impl FourierCoefficients {
    pub fn new(n_max: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != 2 * n_max + 1 {
            return Err(Error::Parameter(format!(
                "expected {} coefficients for n_max = {n_max}, got {}",
                2 * n_max + 1,
                coeffs.len()
            )));
        }
        Ok(Self { n_max, coeffs })
    }

    pub fn zeros(n_max: usize) -> Self {
        Self {
            n_max,
            coeffs: vec![Complex64::new(0.0, 0.0); 2 * n_max + 1],
        }
    }

    /// The single mode `e^{ins}` with unit coefficient.
    pub fn mode(n_max: usize, n: i64) -> Self {
        let mut out = Self::zeros(n_max);
        out[n] = Complex64::new(1.0, 0.0);
        out
    }

    /// Builds coefficients from a function of the frequency index.
    pub fn from_fn(n_max: usize, mut f: impl FnMut(i64) -> Complex64) -> Self {
        let n = n_max as i64;
        Self {
            n_max,
            coeffs: (-n..=n).map(&mut f).collect(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Frequencies `-N..=N` in storage order.
    pub fn frequencies(&self) -> impl Iterator<Item = i64> + Clone {
        let n = self.n_max as i64;
        -n..=n
    }

    /// Pairs `(n, ĝ_n)` in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.frequencies().zip(self.coeffs.iter().copied())
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Coefficient `ĝ_n`, or zero when `|n| > N`.
    pub fn get(&self, n: i64) -> Complex64 {
        if n.unsigned_abs() as usize > self.n_max {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(n + self.n_max as i64) as usize]
        }
    }

    /// Euclidean norm of the coefficient vector; the L² norm of the
    /// function normalised by `1/2π`.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn map(&self, mut f: impl FnMut(i64, Complex64) -> Complex64) -> Self {
        Self {
            n_max: self.n_max,
            coeffs: self.iter().map(|(n, c)| f(n, c)).collect(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        self.map(|_, c| c * factor)
    }

    /// Copies the coefficients into a vector with a different `N`,
    /// truncating or zero-padding.
    pub fn resized(&self, n_max: usize) -> Self {
        Self::from_fn(n_max, |n| self.get(n))
    }

    /// Evaluates the trigonometric polynomial at one parameter value.
    pub fn eval(&self, s: f64) -> Complex64 {
        let step = Complex64::from_polar(1.0, s);
        let mut phase = Complex64::from_polar(1.0, -(self.n_max as f64) * s);
        let mut acc = Complex64::new(0.0, 0.0);
        for c in &self.coeffs {
            acc += c * phase;
            phase *= step;
        }
        acc
    }
}

impl std::ops::Index<i64> for FourierCoefficients {
    type Output = Complex64;

    fn index(&self, n: i64) -> &Complex64 {
        assert!(
            n.unsigned_abs() as usize <= self.n_max,
            "frequency {n} outside -{0}..={0}",
            self.n_max
        );
        &self.coeffs[(n + self.n_max as i64) as usize]
    }
}

impl std::ops::IndexMut<i64> for FourierCoefficients {
    fn index_mut(&mut self, n: i64) -> &mut Complex64 {
        assert!(
            n.unsigned_abs() as usize <= self.n_max,
            "frequency {n} outside -{0}..={0}",
            self.n_max
        );
        &mut self.coeffs[(n + self.n_max as i64) as usize]
    }
}

/// Values of a periodic function on the uniform grid `θ_j = 2πj/M`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    values: Vec<Complex64>,
}

impl SampledFunction {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::Parameter(format!(
                "grid needs at least 2 points, got {}",
                values.len()
            )));
        }
        Ok(Self { values })
    }

    /// Samples `f(θ_j)` for `j = 0..M`.
    pub fn from_fn(grid_size: usize, mut f: impl FnMut(f64) -> Complex64) -> Result<Self> {
        Self::new(grid_points(grid_size).map(&mut f).collect())
    }

    pub fn from_real(values: Vec<f64>) -> Result<Self> {
        Self::new(values.into_iter().map(|v| Complex64::new(v, 0.0)).collect())
    }

    pub fn grid_size(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Uniform-grid mean, which is the trapezoid rule for `(1/2π)∫ f dθ`.
    pub fn mean(&self) -> Complex64 {
        self.values.iter().sum::<Complex64>() / self.values.len() as f64
    }
}

/// Grid angles `2πj/M`, `j = 0..M`.
pub fn grid_points(grid_size: usize) -> impl Iterator<Item = f64> + Clone {
    let h = 2.0 * PI / grid_size as f64;
    (0..grid_size).map(move |j| j as f64 * h)
}

/// Default grid for analysis at `n_max` modes: `max(256, 16N)` rounded up
/// to a power of two.
pub fn default_grid_size(n_max: usize) -> usize {
    (16 * n_max).max(256).next_power_of_two()
}

fn check_grid(n_max: usize, grid_size: usize) -> Result<()> {
    if grid_size < 2 * n_max + 2 {
        return Err(Error::Parameter(format!(
            "grid of {grid_size} points cannot resolve n_max = {n_max} (need at least {})",
            2 * n_max + 2
        )));
    }
    Ok(())
}

/// Discrete Fourier analysis `ĝ_n = (1/M) Σ_j f_j e^{-inθ_j}`.
///
/// Exact for trigonometric polynomials of degree at most `M/2 - 1`.
pub fn coeffs_from_samples(f: &SampledFunction, n_max: usize) -> Result<FourierCoefficients> {
    let m = f.grid_size();
    check_grid(n_max, m)?;
    let mut buf = f.values.clone();
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);
    let scale = 1.0 / m as f64;
    Ok(FourierCoefficients::from_fn(n_max, |n| {
        buf[n.rem_euclid(m as i64) as usize] * scale
    }))
}

/// Synthesis `f_j = Σ_n ĝ_n e^{inθ_j}` on an `M`-point grid.
pub fn samples_from_coeffs(g: &FourierCoefficients, grid_size: usize) -> Result<SampledFunction> {
    check_grid(g.n_max(), grid_size)?;
    let mut buf = vec![Complex64::new(0.0, 0.0); grid_size];
    for (n, c) in g.iter() {
        buf[n.rem_euclid(grid_size as i64) as usize] = c;
    }
    FftPlanner::new().plan_fft_inverse(grid_size).process(&mut buf);
    Ok(SampledFunction { values: buf })
}

/// `D = -i d/ds`: multiplies `ĝ_n` by `n`.
pub fn differentiate(g: &FourierCoefficients) -> FourierCoefficients {
    g.map(|n, c| c * n as f64)
}

/// `D⁻¹` on zero-mean functions: divides `ĝ_n` by `n`, returns zero mean.
///
/// Fails when `|ĝ_0| > tol`, since such input is outside the range of `D`.
pub fn antiderivative(g: &FourierCoefficients, tol: f64) -> Result<FourierCoefficients> {
    let mean = g.get(0).norm();
    if mean > tol {
        return Err(Error::NonzeroMean { mean, tol });
    }
    Ok(g.map(|n, c| if n == 0 { Complex64::new(0.0, 0.0) } else { c / n as f64 }))
}

/// DtN map of the unit disk: multiplies `ĝ_n` by `|n|`.
pub fn disk_dtn(g: &FourierCoefficients) -> FourierCoefficients {
    g.map(|n, c| c * n.abs() as f64)
}

/// Hilbert transform of the unit disk: multiplies `ĝ_n` by `sgn n`.
pub fn disk_hilbert(g: &FourierCoefficients) -> FourierCoefficients {
    g.map(|n, c| c * n.signum() as f64)
}
