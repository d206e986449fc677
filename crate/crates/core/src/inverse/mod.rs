//! Boundary reconstruction from a Hilbert matrix.

mod residual;
mod solver;
mod subspace;

pub use residual::{objective, objective_and_gradient, q_component, quadratic_residual, real_jacobian, QuadraticResidual};
pub use solver::{
    descend, reconstruct, Direction, Init, ReconstructionResult, SolverConfig, StopReason, DEFAULT_EPS,
    DEFAULT_MAX_ITER, DEFAULT_TOL,
};
pub use subspace::{near_fixed_subspace, SubspaceBasis, MAX_CANONICAL_CONDITION};
