//! Reference computations that share no code with the library: composite
//! Gauss–Legendre arc length, Newton inversion of `s(θ)`, and plain DFT sums.

#![allow(dead_code, clippy::excessive_precision)]

use std::f64::consts::PI;

use num_complex::Complex64;

const GL_NODES: [f64; 8] = [
    -0.960_289_856_497_536_2,
    -0.796_666_477_413_626_7,
    -0.525_532_409_916_329_0,
    -0.183_434_642_495_649_8,
    0.183_434_642_495_649_8,
    0.525_532_409_916_329_0,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_2,
];
const GL_WEIGHTS: [f64; 8] = [
    0.101_228_536_290_376_3,
    0.222_381_034_453_374_5,
    0.313_706_645_877_887_3,
    0.362_683_783_378_362_0,
    0.362_683_783_378_362_0,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_5,
    0.101_228_536_290_376_3,
];

/// A polynomial map `Φ(z) = Σ a_k z^k`.
#[derive(Clone, Debug)]
pub struct Poly(pub Vec<Complex64>);

impl Poly {
    pub fn real(c: &[f64]) -> Self {
        Poly(c.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.0.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }

    pub fn deriv(&self, z: Complex64) -> Complex64 {
        self.0
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (k, &a)| acc * z + a * k as f64)
    }

    pub fn speed(&self, theta: f64) -> f64 {
        self.deriv(Complex64::from_polar(1.0, theta)).norm()
    }
}

/// Arc length of `θ ↦ Φ(e^{iθ})` with cumulative panel sums.
pub struct ArcLength {
    poly: Poly,
    panels: usize,
    cumulative: Vec<f64>,
}

impl ArcLength {
    pub fn new(poly: Poly, panels: usize) -> Self {
        let h = 2.0 * PI / panels as f64;
        let mut cumulative = vec![0.0];
        for p in 0..panels {
            let a = p as f64 * h;
            let last = *cumulative.last().unwrap();
            cumulative.push(last + Self::panel(&poly, a, a + h));
        }
        Self { poly, panels, cumulative }
    }

    fn panel(poly: &Poly, a: f64, b: f64) -> f64 {
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        GL_NODES.iter().zip(GL_WEIGHTS).map(|(x, w)| w * poly.speed(mid + half * x)).sum::<f64>() * half
    }

    pub fn total(&self) -> f64 {
        *self.cumulative.last().unwrap()
    }

    /// `∫_0^θ |Φ'|` for `θ ∈ [0, 2π]`.
    pub fn at(&self, theta: f64) -> f64 {
        let h = 2.0 * PI / self.panels as f64;
        let p = ((theta / h).floor() as usize).min(self.panels - 1);
        self.cumulative[p] + Self::panel(&self.poly, p as f64 * h, theta)
    }

    /// Solves `at(θ) = s` by bisection-safeguarded Newton.
    pub fn invert(&self, s: f64) -> f64 {
        let (mut lo, mut hi) = (0.0, 2.0 * PI);
        let mut t = 2.0 * PI * s / self.total();
        for _ in 0..100 {
            let f = self.at(t) - s;
            if f.abs() < 1e-15 * self.total() {
                break;
            }
            if f > 0.0 {
                hi = t;
            } else {
                lo = t;
            }
            let next = t - f / self.poly.speed(t);
            t = if next > lo && next < hi { next } else { 0.5 * (lo + hi) };
        }
        t
    }
}

/// Length-normalising factor `2π / length` of the raw map.
pub fn length_scale(poly: &Poly, panels: usize) -> f64 {
    2.0 * PI / ArcLength::new(poly.clone(), panels).total()
}

/// Arc-length coefficients `γ̂_{-N..N}` of the length-normalised boundary,
/// from `m` uniform samples in `s` and a direct DFT.
pub fn boundary_coefficients(poly: &Poly, n_max: usize, m: usize) -> Vec<Complex64> {
    let arc = ArcLength::new(poly.clone(), 4096);
    let scale = 2.0 * PI / arc.total();
    let samples: Vec<Complex64> = (0..m)
        .map(|j| {
            let s = 2.0 * PI * j as f64 / m as f64;
            let theta = arc.invert(s / scale);
            poly.eval(Complex64::from_polar(1.0, theta)) * scale
        })
        .collect();
    dft(&samples, n_max)
}

/// `(1/M) Σ_j f_j e^{-i n s_j}` for `n = -N..N`.
pub fn dft(samples: &[Complex64], n_max: usize) -> Vec<Complex64> {
    let m = samples.len();
    (-(n_max as i64)..=n_max as i64)
        .map(|n| {
            samples
                .iter()
                .enumerate()
                .map(|(j, f)| f * Complex64::from_polar(1.0, -2.0 * PI * (n * j as i64) as f64 / m as f64))
                .sum::<Complex64>()
                / m as f64
        })
        .collect()
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn diff_norm(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

/// `‖A v − v‖ / ‖v‖` by explicit sums.
pub fn fixed_point_defect(entries: &nalgebra::DMatrix<Complex64>, v: &[Complex64]) -> f64 {
    let d = v.len();
    let hv: Vec<Complex64> = (0..d).map(|r| (0..d).map(|c| entries[(r, c)] * v[c]).sum()).collect();
    diff_norm(&hv, v) / norm(v)
}

pub fn dented_disk() -> Poly {
    Poly::real(&[0.0, 1.5, 0.0, 0.4])
}

pub fn cardioid() -> Poly {
    Poly::real(&[2.25, 3.0, 1.0])
}

pub fn asymmetric() -> Poly {
    Poly(vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(6.0, 0.0),
        Complex64::new(0.5, -0.7),
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
    ])
}

/// The 7×7 matrix printed for the asymmetric example, real and imaginary
/// parts, rows and columns `n = -3..3`.
pub const PRINTED_RE: [[f64; 7]; 7] = [
    [-1.01, 0.01, 0.00, 0.0, -0.01, -0.08, 0.00],
    [0.01, -1.03, 0.00, 0.0, 0.12, -0.01, -0.12],
    [0.01, 0.00, -1.04, 0.0, 0.08, 0.23, -0.02],
    [0.0; 7],
    [0.02, -0.23, -0.08, 0.0, 1.04, 0.00, -0.01],
    [0.12, 0.01, -0.12, 0.0, 0.00, 1.03, -0.01],
    [0.00, 0.08, 0.01, 0.0, 0.00, 0.01, 1.01],
];
pub const PRINTED_IM: [[f64; 7]; 7] = [
    [0.00, -0.01, 0.00, 0.0, 0.04, -0.03, 0.01],
    [0.00, 0.00, 0.00, 0.0, -0.05, 0.09, -0.05],
    [-0.01, 0.00, 0.00, 0.0, 0.07, -0.10, 0.12],
    [0.0; 7],
    [0.12, -0.10, 0.07, 0.0, 0.00, 0.00, -0.01],
    [-0.05, 0.09, -0.06, 0.0, 0.00, 0.00, 0.02],
    [0.01, -0.03, 0.04, 0.0, 0.00, -0.01, 0.00],
];

/// Entrywise `|conj(h_{mn}) − printed_{mn}|`.
pub fn printed_errors(h: &nalgebra::DMatrix<Complex64>) -> Vec<((i64, i64), f64)> {
    let mut out = Vec::new();
    for r in 0..7 {
        for c in 0..7 {
            let p = Complex64::new(PRINTED_RE[r][c], PRINTED_IM[r][c]);
            out.push(((r as i64 - 3, c as i64 - 3), (h[(r, c)].conj() - p).norm()));
        }
    }
    out
}

/// `F` by direct double sums over all `k = 1..N−1`.
pub fn objective(g: &[Complex64]) -> f64 {
    let n = (g.len() as i64 - 1) / 2;
    let at = |m: i64| g[(m + n) as usize];
    let q = |k: i64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for m in -n..=n {
            if (-n..=n).contains(&(m + k)) {
                acc += at(m) * at(m + k).conj() * (m * (m + k)) as f64;
            }
        }
        acc
    };
    (q(0).re - 1.0).powi(2) + 2.0 * (1..n).map(|k| q(k).norm_sqr()).sum::<f64>()
}
