//! The truncated unit-speed system and its derivatives.
//!
//! For coefficients `ĝ_{-N..N}`,
//!
//! ```text
//! q_0 = Σ_m m² |ĝ_m|²                       (must equal 1)
//! q_k = Σ_m m(m+k) ĝ_m conj(ĝ_{m+k})        (must vanish, k = 1..N-1)
//! ```
//!
//! Negative `k` are redundant since `q_{-k} = conj(q_k)`. The objective
//! counts each `q_k` twice to account for them:
//! `F = (q_0 − 1)² + 2 Σ_{k≥1} |q_k|²`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::subspace::SubspaceBasis;
use crate::fourier::FourierCoefficients;

/// `q_0` and `q_1, …, q_{N−1}` of a coefficient vector.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticResidual {
    pub q0: f64,
    pub q: Vec<Complex64>,
}

impl QuadraticResidual {
    /// `(q_0 − 1, q_1, …, q_{N−1})`.
    pub fn vector(&self) -> Vec<Complex64> {
        std::iter::once(Complex64::new(self.q0 - 1.0, 0.0)).chain(self.q.iter().copied()).collect()
    }

    pub fn norm(&self) -> f64 {
        self.vector().iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn objective(&self) -> f64 {
        (self.q0 - 1.0).powi(2) + 2.0 * self.q.iter().map(|c| c.norm_sqr()).sum::<f64>()
    }
}

/// `q_k = Σ_m m(m+k) ĝ_m conj(ĝ_{m+k})` for any integer `k`, summing over
/// the stored range.
pub fn q_component(g: &FourierCoefficients, k: i64) -> Complex64 {
    let n = g.n_max() as i64;
    let lo = (-n).max(-n - k);
    let hi = n.min(n - k);
    (lo..=hi)
        .map(|m| g[m] * g[m + k].conj() * (m * (m + k)) as f64)
        .sum()
}

/// `ĝ_0` carries weight zero in every `q_k`, so it never affects the result.
pub fn quadratic_residual(g: &FourierCoefficients) -> QuadraticResidual {
    let n = g.n_max() as i64;
    QuadraticResidual {
        q0: q_component(g, 0).re,
        q: (1..n).map(|k| q_component(g, k)).collect(),
    }
}

pub fn objective(g: &FourierCoefficients) -> f64 {
    quadratic_residual(g).objective()
}

/// `∂F/∂conj(ĝ_j)` for all `j`.
fn coefficient_gradient(g: &FourierCoefficients, res: &QuadraticResidual) -> FourierCoefficients {
    let n = g.n_max() as i64;
    let r0 = res.q0 - 1.0;
    FourierCoefficients::from_fn(g.n_max(), |j| {
        let mut acc = g[j] * (2.0 * r0 * (j * j) as f64);
        for (k, qk) in (1..n).zip(&res.q) {
            if j - k >= -n {
                acc += 2.0 * qk.conj() * g[j - k] * ((j - k) * j) as f64;
            }
            if j + k <= n {
                acc += 2.0 * qk * g[j + k] * (j * (j + k)) as f64;
            }
        }
        acc
    })
}

/// Objective `F` at `Σ c_k e_k` and its Wirtinger gradient `∂F/∂conj(c)`.
///
/// A step `c ← c − η·gradient` decreases `F` to first order. The real
/// derivatives are `∂F/∂Re c_k = 2 Re grad_k`, `∂F/∂Im c_k = 2 Im grad_k`.
pub fn objective_and_gradient(basis: &SubspaceBasis, coords: &[Complex64]) -> (f64, Vec<Complex64>) {
    let g = basis.combine(coords);
    let res = quadratic_residual(&g);
    let dg = coefficient_gradient(&g, &res);
    let grad = basis
        .vectors()
        .iter()
        .map(|e| e.as_slice().iter().zip(dg.as_slice()).map(|(b, d)| b.conj() * d).sum())
        .collect();
    (res.objective(), grad)
}

/// Real least-squares form of the system in `W`-coordinates.
///
/// `x = (Re c, Im c)` and `r = (q_0 − 1, √2 Re q_k, √2 Im q_k, …)`, so that
/// `F = |r|²`. Returns `(r, J)` with `J = ∂r/∂x`.
pub fn real_jacobian(basis: &SubspaceBasis, coords: &[Complex64]) -> (DVector<f64>, DMatrix<f64>) {
    let g = basis.combine(coords);
    let res = quadratic_residual(&g);
    let n = g.n_max() as i64;
    let l = basis.dim();
    let rows = 2 * res.q.len() + 1;
    let mut r = DVector::zeros(rows);
    let mut jac = DMatrix::zeros(rows, 2 * l);
    let sqrt2 = std::f64::consts::SQRT_2;

    // Projections onto the basis: Σ_j w_j B_jl and Σ_j w_j conj(B_jl).
    let project = |w: &dyn Fn(i64) -> Complex64, conjugate: bool| -> Vec<Complex64> {
        basis
            .vectors()
            .iter()
            .map(|e| {
                e.iter()
                    .map(|(j, b)| w(j) * if conjugate { b.conj() } else { b })
                    .sum()
            })
            .collect()
    };

    r[0] = res.q0 - 1.0;
    let a0 = project(&|j| g[j].conj() * (j * j) as f64, false);
    for (col, a) in a0.iter().enumerate() {
        jac[(0, col)] = 2.0 * a.re;
        jac[(0, l + col)] = -2.0 * a.im;
    }

    for (idx, (k, qk)) in (1..n).zip(&res.q).enumerate() {
        let row = 1 + 2 * idx;
        r[row] = sqrt2 * qk.re;
        r[row + 1] = sqrt2 * qk.im;
        let holo = project(
            &|j| if j + k <= n { g[j + k].conj() * (j * (j + k)) as f64 } else { Complex64::new(0.0, 0.0) },
            false,
        );
        let anti = project(
            &|j| if j - k >= -n { g[j - k] * ((j - k) * j) as f64 } else { Complex64::new(0.0, 0.0) },
            true,
        );
        for col in 0..l {
            let dx = holo[col] + anti[col];
            let dy = Complex64::new(0.0, 1.0) * (holo[col] - anti[col]);
            jac[(row, col)] = sqrt2 * dx.re;
            jac[(row + 1, col)] = sqrt2 * dx.im;
            jac[(row, l + col)] = sqrt2 * dy.re;
            jac[(row + 1, l + col)] = sqrt2 * dy.im;
        }
    }
    (r, jac)
}
