//! Coefficient vectors viewed as closed planar curves.
//!
//! The diagnostics here decide whether a unit-speed fixed point of the
//! Hilbert transform is the actual boundary: it must be a simple curve, and
//! it is only determined up to rotation and translation.

use std::collections::{HashMap, HashSet};
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Result;
use crate::fourier::{differentiate, samples_from_coeffs, FourierCoefficients};

/// Default grid for [`is_simple`].
pub const DEFAULT_SIMPLICITY_GRID: usize = 4096;
/// Default proximity for [`is_simple`].
pub const DEFAULT_PROXIMITY: f64 = 1e-3;

/// Closed curve sampled at uniform parameter values `s_j = 2πj/M`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarCurve {
    points: Vec<Complex64>,
}

impl PlanarCurve {
    pub fn new(points: Vec<Complex64>) -> Self {
        Self { points }
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Parameter values `2πj/M`.
    pub fn parameters(&self) -> Vec<f64> {
        let m = self.points.len() as f64;
        (0..self.points.len()).map(|j| 2.0 * PI * j as f64 / m).collect()
    }
}

/// Rigid motion `z ↦ αz + shift` with `|α| = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlignmentTransform {
    pub alpha: Complex64,
    pub shift: Complex64,
}

impl AlignmentTransform {
    pub fn identity() -> Self {
        Self {
            alpha: Complex64::new(1.0, 0.0),
            shift: Complex64::new(0.0, 0.0),
        }
    }

    /// Applies the motion to a coefficient vector.
    pub fn apply(&self, f: &FourierCoefficients) -> FourierCoefficients {
        f.map(|n, c| if n == 0 { self.alpha * c + self.shift } else { self.alpha * c })
    }
}

/// Samples `Σ ĝ_n e^{ins_j}` on `grid_size` uniform points.
pub fn evaluate(g: &FourierCoefficients, grid_size: usize) -> Result<PlanarCurve> {
    Ok(PlanarCurve::new(samples_from_coeffs(g, grid_size)?.into_values()))
}

/// Coefficients of the velocity `dγ/ds`, i.e. `i·n·ĝ_n`.
pub fn velocity(g: &FourierCoefficients) -> FourierCoefficients {
    differentiate(g).scale(Complex64::new(0.0, 1.0))
}

/// `max_j | |γ'(s_j)| − 1 |`, the deviation from unit speed.
pub fn speed_deviation(g: &FourierCoefficients, grid_size: usize) -> Result<f64> {
    let v = samples_from_coeffs(&velocity(g), grid_size)?;
    Ok(v.values().iter().map(|z| (z.norm() - 1.0).abs()).fold(0.0, f64::max))
}

/// How two pieces of a curve collide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    /// Two non-adjacent polyline segments intersect.
    Crossing,
    /// Two points far apart in parameter are close in the plane.
    Proximity,
}

/// A pair of parameter values at which the curve meets itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub s1: f64,
    pub s2: f64,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimplicityReport {
    pub simple: bool,
    /// Total number of offending pairs found.
    pub count: usize,
    /// The first few offending pairs.
    pub witnesses: Vec<Witness>,
}

const MAX_WITNESSES: usize = 64;

/// Whether the curve with coefficients `g` has no self-intersections.
///
/// Two tests run on the `grid_size`-point polyline: segment crossings, and
/// points more than `10·proximity` apart in parameter that come within
/// `proximity` of each other. The second catches tangential overlaps such as
/// a circle traversed twice.
pub fn is_simple(g: &FourierCoefficients, grid_size: usize, proximity: f64) -> Result<SimplicityReport> {
    let curve = evaluate(g, grid_size)?;
    let params = curve.parameters();
    Ok(find_self_intersections(curve.points(), &params, 2.0 * PI, proximity))
}

/// Self-intersection search on a closed polyline with parameter values
/// `params` (increasing, periodic with `period`).
pub fn find_self_intersections(
    points: &[Complex64],
    params: &[f64],
    period: f64,
    proximity: f64,
) -> SimplicityReport {
    assert_eq!(points.len(), params.len());
    let m = points.len();
    let mut report = SimplicityReport {
        simple: true,
        count: 0,
        witnesses: Vec::new(),
    };
    if m < 4 {
        return report;
    }
    let centre = points[0];
    if points.iter().all(|p| (p - centre).norm() < 0.5 * proximity) {
        report.simple = false;
        report.count = 1;
        report.witnesses.push(Witness {
            kind: WitnessKind::Proximity,
            s1: params[0],
            s2: params[m / 2],
            distance: (points[m / 2] - centre).norm(),
        });
        return report;
    }

    // Each kind keeps half of the witness slots.
    let mut record = |w: Witness| {
        report.count += 1;
        if report.witnesses.iter().filter(|x| x.kind == w.kind).count() < MAX_WITNESSES / 2 {
            report.witnesses.push(w);
        }
    };

    let seg_len = |i: usize| (points[(i + 1) % m] - points[i]).norm();
    let mean_seg = (0..m).map(seg_len).sum::<f64>() / m as f64;
    let cell = proximity.max(mean_seg);
    let key = |z: Complex64| ((z.re / cell).floor() as i64, (z.im / cell).floor() as i64);

    // Segment crossings.
    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for i in 0..m {
        let (a, b) = (points[i], points[(i + 1) % m]);
        let (x0, y0) = key(Complex64::new(a.re.min(b.re), a.im.min(b.im)));
        let (x1, y1) = key(Complex64::new(a.re.max(b.re), a.im.max(b.im)));
        for x in x0..=x1 {
            for y in y0..=y1 {
                grid.entry((x, y)).or_default().push(i);
            }
        }
    }
    let mut seen = HashSet::new();
    for bucket in grid.values() {
        for (k, &i) in bucket.iter().enumerate() {
            for &j in &bucket[k + 1..] {
                let (lo, hi) = (i.min(j), i.max(j));
                let gap = hi - lo;
                if gap <= 1 || gap == m - 1 || !seen.insert((lo, hi)) {
                    continue;
                }
                let (a, b) = (points[lo], points[(lo + 1) % m]);
                let (c, d) = (points[hi], points[(hi + 1) % m]);
                if segments_intersect(a, b, c, d) {
                    record(Witness {
                        kind: WitnessKind::Crossing,
                        s1: params[lo],
                        s2: params[hi],
                        distance: 0.0,
                    });
                }
            }
        }
    }

    // Parameter-distant points that nearly coincide.
    let pkey = |z: Complex64| ((z.re / proximity).floor() as i64, (z.im / proximity).floor() as i64);
    let mut pgrid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (i, &p) in points.iter().enumerate() {
        pgrid.entry(pkey(p)).or_default().push(i);
    }
    let min_sep = 10.0 * proximity;
    for (i, &p) in points.iter().enumerate() {
        let (kx, ky) = pkey(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                let Some(bucket) = pgrid.get(&(kx + dx, ky + dy)) else {
                    continue;
                };
                for &j in bucket {
                    if j <= i {
                        continue;
                    }
                    let ds = (params[j] - params[i]).rem_euclid(period);
                    if ds.min(period - ds) <= min_sep {
                        continue;
                    }
                    let dist = (points[j] - p).norm();
                    if dist < proximity {
                        record(Witness {
                            kind: WitnessKind::Proximity,
                            s1: params[i],
                            s2: params[j],
                            distance: dist,
                        });
                    }
                }
            }
        }
    }

    report.simple = report.count == 0;
    report
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn on_segment(a: Complex64, b: Complex64, p: Complex64) -> bool {
    p.re >= a.re.min(b.re) && p.re <= a.re.max(b.re) && p.im >= a.im.min(b.im) && p.im <= a.im.max(b.im)
}

/// Closed-segment intersection test (touching counts).
fn segments_intersect(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> bool {
    let d1 = cross(b - a, c - a);
    let d2 = cross(b - a, d - a);
    let d3 = cross(d - c, a - c);
    let d4 = cross(d - c, b - c);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    (d1 == 0.0 && on_segment(a, b, c))
        || (d2 == 0.0 && on_segment(a, b, d))
        || (d3 == 0.0 && on_segment(c, d, a))
        || (d4 == 0.0 && on_segment(c, d, b))
}

/// Best rigid motion taking `f` onto `g`, and the residual distance.
///
/// Minimises `Σ_{n≠0} |α f̂_n − ĝ_n|²` over `|α| = 1`; the shift then matches
/// the means. By Parseval the distance is the normalised L² distance of the
/// curves once translation is removed.
pub fn align(f: &FourierCoefficients, g: &FourierCoefficients) -> (AlignmentTransform, f64) {
    let n_max = f.n_max().max(g.n_max());
    let f = f.resized(n_max);
    let g = g.resized(n_max);
    let corr: Complex64 = f
        .iter()
        .zip(g.iter())
        .filter(|((n, _), _)| *n != 0)
        .map(|((_, a), (_, b))| b * a.conj())
        .sum();
    let alpha = if corr.norm() > 0.0 {
        corr / corr.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    let shift = g[0] - alpha * f[0];
    let dist = f
        .iter()
        .zip(g.iter())
        .filter(|((n, _), _)| *n != 0)
        .map(|((_, a), (_, b))| (alpha * a - b).norm_sqr())
        .sum::<f64>()
        .sqrt();
    (AlignmentTransform { alpha, shift }, dist)
}
