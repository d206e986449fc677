//! Hilbert-transform and Dirichlet-to-Neumann matrices of simply connected
//! planar domains, and reconstruction of the boundary from them.
//!
//! Everything is expressed in the trigonometric basis `e^{ins}`, `|n| ≤ N`,
//! of the boundary parametrised by arc length (total length 2π).
//!
//! ```
//! use calderon::{forward, reconstruct, ConformalMap, SolverConfig};
//!
//! let map = ConformalMap::from_real(&[2.25, 3.0, 1.0]).unwrap();
//! let fwd = forward(&map, 10, 1024).unwrap();
//! let rec = reconstruct(&fwd.matrix, &SolverConfig::default()).unwrap();
//! assert!(rec.converged && rec.is_simple);
//! ```

// `!(x > 0.0)` is how parameter checks reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod curve;
pub mod error;
pub mod families;
pub mod forward;
pub mod fourier;
pub mod inverse;
pub mod io;
pub mod matrix;

pub use curve::{align, evaluate, is_simple, speed_deviation, AlignmentTransform, PlanarCurve, SimplicityReport};
pub use error::{Error, Result};
pub use forward::{forward, normalize_length, BoundaryParametrization, ConformalMap, ForwardResult};
pub use fourier::{FourierCoefficients, SampledFunction};
pub use inverse::{
    near_fixed_subspace, quadratic_residual, reconstruct, Init, ReconstructionResult, SolverConfig, SubspaceBasis,
};
pub use matrix::{MatrixKind, SpectralMatrix};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/fourier.md")]
    mod fourier {}
    #[doc = include_str!("../../../book/src/forward.md")]
    mod forward {}
    #[doc = include_str!("../../../book/src/inverse.md")]
    mod inverse {}
    #[doc = include_str!("../../../book/src/curves.md")]
    mod curves {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
