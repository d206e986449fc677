//! Dense operators in the trigonometric basis.
//!
//! Entry `(m, n)` maps input frequency `n` to output frequency `m`, so
//! `(Af)^_m = Σ_n a_{mn} f̂_n`. Frequencies `-N..=N` occupy rows and columns
//! `0..=2N`, matching [`FourierCoefficients`].

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::FourierCoefficients;

/// Which operator a [`SpectralMatrix`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    /// Hilbert transform of the domain, `H = D⁻¹Λ`.
    Hilbert,
    /// Dirichlet-to-Neumann operator `Λ`.
    Dtn,
}

impl std::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MatrixKind::Hilbert => "hilbert",
            MatrixKind::Dtn => "dtn",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralMatrix {
    n_max: usize,
    kind: MatrixKind,
    entries: DMatrix<Complex64>,
}

impl SpectralMatrix {
    pub fn new(kind: MatrixKind, n_max: usize, entries: DMatrix<Complex64>) -> Result<Self> {
        let dim = 2 * n_max + 1;
        if entries.nrows() != dim || entries.ncols() != dim {
            return Err(Error::InvalidMatrix(format!(
                "expected {dim}x{dim} entries for n_max = {n_max}, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        Ok(Self { n_max, kind, entries })
    }

    /// Builds a matrix from its columns, column `k` holding the image of
    /// the mode `e^{i(k-N)s}`.
    pub fn from_columns(kind: MatrixKind, columns: &[FourierCoefficients]) -> Result<Self> {
        let dim = columns.len();
        if dim.is_multiple_of(2) {
            return Err(Error::InvalidMatrix(format!("even column count {dim}")));
        }
        let n_max = dim / 2;
        if let Some(bad) = columns.iter().find(|c| c.n_max() != n_max) {
            return Err(Error::InvalidMatrix(format!(
                "column with n_max {} in a matrix with n_max {n_max}",
                bad.n_max()
            )));
        }
        let entries = DMatrix::from_fn(dim, dim, |r, k| columns[k].as_slice()[r]);
        Self::new(kind, n_max, entries)
    }

    /// The Hilbert matrix of the unit disk, `diag(sgn n)`.
    pub fn disk_hilbert(n_max: usize) -> Self {
        let dim = 2 * n_max + 1;
        let entries = DMatrix::from_fn(dim, dim, |r, c| {
            if r == c {
                Complex64::new((r as i64 - n_max as i64).signum() as f64, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        Self { n_max, kind: MatrixKind::Hilbert, entries }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        2 * self.n_max + 1
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn into_entries(self) -> DMatrix<Complex64> {
        self.entries
    }

    fn pos(&self, n: i64) -> usize {
        assert!(n.unsigned_abs() as usize <= self.n_max, "frequency {n} out of range");
        (n + self.n_max as i64) as usize
    }

    /// Entry at output frequency `m`, input frequency `n`.
    pub fn get(&self, m: i64, n: i64) -> Complex64 {
        self.entries[(self.pos(m), self.pos(n))]
    }

    pub fn frequencies(&self) -> impl Iterator<Item = i64> + Clone {
        let n = self.n_max as i64;
        -n..=n
    }

    pub fn apply(&self, f: &FourierCoefficients) -> FourierCoefficients {
        let v = &self.entries * DVector::from_column_slice(f.resized(self.n_max).as_slice());
        FourierCoefficients::new(self.n_max, v.as_slice().to_vec()).expect("dimension preserved")
    }

    /// `λ_{mn} = m·h_{mn}`.
    pub fn to_dtn(&self) -> SpectralMatrix {
        match self.kind {
            MatrixKind::Dtn => self.clone(),
            MatrixKind::Hilbert => {
                let n = self.n_max as f64;
                let entries = DMatrix::from_fn(self.dim(), self.dim(), |r, c| {
                    self.entries[(r, c)] * (r as f64 - n)
                });
                Self { n_max: self.n_max, kind: MatrixKind::Dtn, entries }
            }
        }
    }

    /// `h_{mn} = λ_{mn}/m`, with row `m = 0` set to zero.
    pub fn to_hilbert(&self) -> SpectralMatrix {
        match self.kind {
            MatrixKind::Hilbert => self.clone(),
            MatrixKind::Dtn => {
                let n = self.n_max as f64;
                let entries = DMatrix::from_fn(self.dim(), self.dim(), |r, c| {
                    let m = r as f64 - n;
                    if m == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        self.entries[(r, c)] / m
                    }
                });
                Self { n_max: self.n_max, kind: MatrixKind::Hilbert, entries }
            }
        }
    }

    /// Largest magnitudes in row `m = 0` and column `n = 0`.
    pub fn structural_zero_defect(&self) -> (f64, f64) {
        let z = self.n_max;
        let row = self.entries.row(z).iter().map(|c| c.norm()).fold(0.0, f64::max);
        let col = self.entries.column(z).iter().map(|c| c.norm()).fold(0.0, f64::max);
        (row, col)
    }

    /// `max |λ_{mn} − conj(λ_{nm})|` of the associated DtN matrix.
    pub fn self_adjoint_defect(&self) -> f64 {
        let dtn = self.to_dtn();
        let e = &dtn.entries;
        let mut worst = 0.0_f64;
        for r in 0..self.dim() {
            for c in r..self.dim() {
                worst = worst.max((e[(r, c)] - e[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn max_imag(&self) -> f64 {
        self.entries.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &SpectralMatrix) -> f64 {
        assert_eq!(self.n_max, other.n_max);
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Worst relative defect `‖H²v − v‖/‖v‖` over zero-mean `v` supported on
    /// `|n| ≤ band`, i.e. the largest singular value of `(H² − I)` on those
    /// columns.
    pub fn involution_defect(&self, band: usize) -> f64 {
        let h = self.to_hilbert();
        let band = band.min(self.n_max) as i64;
        let cols: Vec<usize> = self
            .frequencies()
            .filter(|&n| n != 0 && n.abs() <= band)
            .map(|n| self.pos(n))
            .collect();
        if cols.is_empty() {
            return 0.0;
        }
        let sq = &h.entries * &h.entries;
        let block = DMatrix::from_fn(self.dim(), cols.len(), |r, k| {
            let c = cols[k];
            sq[(r, c)] - if r == c { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }
        });
        block
            .singular_values()
            .iter()
            .copied()
            .fold(0.0, f64::max)
    }

    /// Checks that row 0 and column 0 vanish within `tol`. Both kinds share
    /// these zeros.
    pub fn validate_structure(&self, tol: f64) -> Result<()> {
        let (row, col) = self.structural_zero_defect();
        if row > tol {
            return Err(Error::InvalidMatrix(format!("row 0 has magnitude {row:e}")));
        }
        if col > tol {
            return Err(Error::InvalidMatrix(format!("column 0 has magnitude {col:e}")));
        }
        Ok(())
    }
}
