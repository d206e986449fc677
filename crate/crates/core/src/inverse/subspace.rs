use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::FourierCoefficients;
use crate::matrix::{MatrixKind, SpectralMatrix};

/// Condition number above which the unit-pattern basis is abandoned.
pub const MAX_CANONICAL_CONDITION: f64 = 1e8;

/// Basis `e_1, …, e_L` of the near-fixed subspace `W` of a Hilbert matrix.
///
/// In the regular case the positive-frequency coordinates of `e_k` are the
/// unit vector at position `k`; `degenerate` marks the fallback to an
/// orthonormal basis.
#[derive(Debug, Clone)]
pub struct SubspaceBasis {
    n_max: usize,
    vectors: Vec<FourierCoefficients>,
    degenerate: bool,
    singular_values: Vec<f64>,
}

impl SubspaceBasis {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `L = dim W`.
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[FourierCoefficients] {
        &self.vectors
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// All singular values of `H − I` on the `n ≠ 0` block, ascending.
    pub fn singular_values(&self) -> &[f64] {
        &self.singular_values
    }

    /// `Σ_k c_k e_k`.
    pub fn combine(&self, coords: &[Complex64]) -> FourierCoefficients {
        assert_eq!(coords.len(), self.dim(), "coordinate count must equal subspace dimension");
        let mut out = FourierCoefficients::zeros(self.n_max);
        for (e, &c) in self.vectors.iter().zip(coords) {
            for (o, v) in out.as_mut_slice().iter_mut().zip(e.as_slice()) {
                *o += c * v;
            }
        }
        out
    }

    /// Basis vectors as the columns of a `(2N+1) × L` matrix.
    pub fn as_matrix(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(2 * self.n_max + 1, self.dim(), |r, k| self.vectors[k].as_slice()[r])
    }

    /// The disk's basis: `e_k` is the mode `e^{iks}`.
    pub fn standard(n_max: usize) -> Self {
        Self {
            n_max,
            vectors: (1..=n_max as i64).map(|k| FourierCoefficients::mode(n_max, k)).collect(),
            degenerate: false,
            singular_values: Vec::new(),
        }
    }
}

/// Extracts `W = span{v : ‖Hv − v‖ < ε‖v‖, v_0 = 0}` and its canonical basis.
///
/// `W` is spanned by the right singular vectors of `H − I` (restricted to
/// `n ≠ 0`) whose singular values are below `eps`.
pub fn near_fixed_subspace(h: &SpectralMatrix, eps: f64) -> Result<SubspaceBasis> {
    if !(eps > 0.0) {
        return Err(Error::Parameter(format!("eps must be positive, got {eps}")));
    }
    let h = match h.kind() {
        MatrixKind::Hilbert => h.clone(),
        MatrixKind::Dtn => h.to_hilbert(),
    };
    h.validate_structure(1e-6)?;
    let n_max = h.n_max();
    if n_max == 0 {
        return Err(Error::InvalidMatrix("n_max must be at least 1".into()));
    }
    let idx: Vec<usize> = (0..h.dim()).filter(|&i| i != n_max).collect();
    let a = DMatrix::from_fn(idx.len(), idx.len(), |r, c| {
        let (i, j) = (idx[r], idx[c]);
        h.entries()[(i, j)] - if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }
    });
    let svd = a.svd(false, true);
    let v_t = svd.v_t.expect("requested V^H");
    let sigma = svd.singular_values;

    let mut order: Vec<usize> = (0..sigma.len()).collect();
    order.sort_by(|&x, &y| sigma[x].total_cmp(&sigma[y]));
    let singular_values: Vec<f64> = order.iter().map(|&i| sigma[i]).collect();
    let kept: Vec<usize> = order.iter().copied().filter(|&i| sigma[i] < eps).collect();
    if kept.is_empty() {
        return Err(Error::EmptySubspace {
            eps,
            smallest: singular_values[0],
        });
    }
    let dim = kept.len();

    // Orthonormal basis of W embedded with a zero at n = 0.
    let full = DMatrix::from_fn(h.dim(), dim, |r, k| {
        if r == n_max {
            Complex64::new(0.0, 0.0)
        } else {
            let pos = if r < n_max { r } else { r - 1 };
            v_t[(kept[k], pos)].conj()
        }
    });

    let canonical = if dim <= n_max {
        let p = full.rows(n_max + 1, dim).into_owned();
        let sv = p.singular_values();
        let (smax, smin) = sv.iter().fold((0.0_f64, f64::INFINITY), |(hi, lo), &s| (hi.max(s), lo.min(s)));
        if smin > 0.0 && smax / smin <= MAX_CANONICAL_CONDITION {
            p.try_inverse().map(|inv| &full * inv)
        } else {
            None
        }
    } else {
        None
    };
    let degenerate = canonical.is_none();
    if degenerate {
        log::warn!(
            "near-fixed subspace of dimension {dim} (n_max {n_max}) has an ill-conditioned \
             positive-frequency projection; using an orthonormal basis"
        );
    }
    let basis = canonical.unwrap_or(full);
    let vectors = (0..dim)
        .map(|k| FourierCoefficients::new(n_max, basis.column(k).iter().copied().collect()).expect("2N+1 rows"))
        .collect();
    Ok(SubspaceBasis {
        n_max,
        vectors,
        degenerate,
        singular_values,
    })
}
