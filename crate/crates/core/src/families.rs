//! Closed-form unit-speed fixed points of the disk's Hilbert transform.
//!
//! Both families solve the quadratic system for the unit disk; only the
//! plain circle is a simple curve. They are the standard examples of
//! algebraically valid but geometrically wrong reconstructions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::FourierCoefficients;

/// The circle of radius `1/(n+1)` traversed `n+1` times:
/// `ĝ_{n+1} = 1/(n+1)`, all other coefficients zero.
///
/// # Panics
///
/// If `n + 1 > n_max`.
pub fn multiply_traversed(n: usize, n_max: usize) -> FourierCoefficients {
    assert!(n < n_max, "mode {} does not fit in n_max = {n_max}", n + 1);
    let k = n as i64 + 1;
    FourierCoefficients::mode(n_max, k).scale(Complex64::new(1.0 / k as f64, 0.0))
}

/// Truncated coefficients of
/// `γ(s) = (e^{is} + (1−|ζ|²)/ζ̄ · ln(1 − ζ̄e^{is})) / |ζ|`:
/// `ĝ_1 = |ζ|` and `ĝ_n = −|ζ|(1−|ζ|²) ζ̄^{n−2} / (n ζ)` for `n ≥ 2`.
pub fn log_family(zeta: Complex64, n_max: usize) -> Result<FourierCoefficients> {
    let r = zeta.norm();
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Parameter(format!("|zeta| = {r} must lie in (0, 1)")));
    }
    let lead = -r * (1.0 - r * r) / zeta;
    Ok(FourierCoefficients::from_fn(n_max, |n| match n {
        1 => Complex64::new(r, 0.0),
        n if n >= 2 => lead * zeta.conj().powi(n as i32 - 2) / n as f64,
        _ => Complex64::new(0.0, 0.0),
    }))
}
