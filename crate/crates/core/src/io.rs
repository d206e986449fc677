//! File formats: matrices as JSON, curves as CSV, plots as SVG.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::curve::PlanarCurve;
use crate::error::{Error, Result};
use crate::matrix::{MatrixKind, SpectralMatrix};

pub const MATRIX_SCHEMA_VERSION: u32 = 1;
pub const MIN_CURVE_ROWS: usize = 16;

/// Tolerance on structural zeros when loading a matrix.
pub const LOAD_STRUCTURE_TOL: f64 = 1e-6;

/// On-disk form of a [`SpectralMatrix`]. Entries are row-major with index
/// `n + N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub schema_version: u32,
    pub n_max: usize,
    pub kind: MatrixKind,
    pub entries_re: Vec<f64>,
    pub entries_im: Vec<f64>,
}

impl From<&SpectralMatrix> for MatrixFile {
    fn from(h: &SpectralMatrix) -> Self {
        let d = h.dim();
        let e = h.entries();
        let cells = (0..d).flat_map(|r| (0..d).map(move |c| (r, c)));
        Self {
            schema_version: MATRIX_SCHEMA_VERSION,
            n_max: h.n_max(),
            kind: h.kind(),
            entries_re: cells.clone().map(|rc| e[rc].re).collect(),
            entries_im: cells.map(|rc| e[rc].im).collect(),
        }
    }
}

impl MatrixFile {
    /// Checks sizes and the structural zeros of the matrix kind.
    pub fn into_matrix(self) -> Result<SpectralMatrix> {
        if self.schema_version != MATRIX_SCHEMA_VERSION {
            return Err(Error::Format(format!("unsupported schema_version {}", self.schema_version)));
        }
        let d = 2 * self.n_max + 1;
        for (name, v) in [("entries_re", &self.entries_re), ("entries_im", &self.entries_im)] {
            if v.len() != d * d {
                return Err(Error::Format(format!("{name} has {} values, expected {}", v.len(), d * d)));
            }
        }
        if self.entries_re.iter().chain(&self.entries_im).any(|x| !x.is_finite()) {
            return Err(Error::Format("non-finite matrix entry".into()));
        }
        let entries = DMatrix::from_fn(d, d, |r, c| {
            Complex64::new(self.entries_re[r * d + c], self.entries_im[r * d + c])
        });
        let h = SpectralMatrix::new(self.kind, self.n_max, entries)?;
        h.validate_structure(LOAD_STRUCTURE_TOL)?;
        Ok(h)
    }
}

pub fn write_matrix(h: &SpectralMatrix, mut out: impl Write) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, &MatrixFile::from(h))?;
    writeln!(out)?;
    Ok(())
}

pub fn read_matrix(input: impl std::io::Read) -> Result<SpectralMatrix> {
    let file: MatrixFile = serde_json::from_reader(input)?;
    file.into_matrix()
}

/// Writes `s,x,y` rows with 17 significant digits.
pub fn write_curve(curve: &PlanarCurve, mut out: impl Write) -> Result<()> {
    if curve.len() < MIN_CURVE_ROWS {
        return Err(Error::Parameter(format!("curve needs at least {MIN_CURVE_ROWS} points")));
    }
    writeln!(out, "s,x,y")?;
    for (s, p) in curve.parameters().iter().zip(curve.points()) {
        writeln!(out, "{s:.16e},{:.16e},{:.16e}", p.re, p.im)?;
    }
    Ok(())
}

/// Reads a curve file; the parameters must be uniform on `[0, 2π)`.
pub fn read_curve(input: impl BufRead) -> Result<PlanarCurve> {
    let mut lines = input.lines();
    let header = lines.next().transpose()?.unwrap_or_default();
    if header.trim() != "s,x,y" {
        return Err(Error::Format(format!("expected header \"s,x,y\", found {header:?}")));
    }
    let mut params = Vec::new();
    let mut points = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let vals: Vec<f64> = line
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Format(format!("row {}: {e}", i + 2)))?;
        if vals.len() != 3 || vals.iter().any(|v| !v.is_finite()) {
            return Err(Error::Format(format!("row {}: expected three finite numbers", i + 2)));
        }
        params.push(vals[0]);
        points.push(Complex64::new(vals[1], vals[2]));
    }
    let m = points.len();
    if m < MIN_CURVE_ROWS {
        return Err(Error::Format(format!("{m} rows, need at least {MIN_CURVE_ROWS}")));
    }
    if params.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Format("s is not strictly increasing".into()));
    }
    let h = 2.0 * PI / m as f64;
    if let Some((j, s)) = params.iter().enumerate().find(|(j, s)| (*s - *j as f64 * h).abs() > 1e-9) {
        return Err(Error::Format(format!("s = {s} at row {} is not on the uniform grid", j + 2)));
    }
    Ok(PlanarCurve::new(points))
}

/// Standalone SVG of a closed polyline, equal aspect, padded by 10%.
///
/// The y axis points up as in the complex plane.
pub fn curve_svg(points: &[Complex64]) -> String {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in points {
        x0 = x0.min(p.re);
        x1 = x1.max(p.re);
        y0 = y0.min(p.im);
        y1 = y1.max(p.im);
    }
    let side = (x1 - x0).max(y1 - y0).max(1e-12);
    let pad = 0.1 * side;
    let (cx, cy) = (0.5 * (x0 + x1), 0.5 * (y0 + y1));
    let view = side + 2.0 * pad;
    let (vx, vy) = (cx - 0.5 * view, -cy - 0.5 * view);

    let mut coords = String::new();
    for p in points {
        let _ = write!(coords, "{:.6},{:.6} ", p.re, -p.im);
    }
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"{vx:.6} {vy:.6} {view:.6} {view:.6}\">\n\
         <polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{:.6}\" vector-effect=\"non-scaling-stroke\"/>\n\
         </svg>\n",
        coords.trim_end(),
        view / 400.0
    )
}
