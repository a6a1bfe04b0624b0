//! Finite differences, the shared Newton kernel, rank estimation, and seeded
//! sampling on the sphere and in the tangent algebra.

mod sampling;
mod simplex;
mod solver;

pub use sampling::{sample_algebra, sample_unit_octonion, RngSpec, SampleDistribution, Sampler};
pub use simplex::nelder_mead;
pub use solver::{
    fd_jacobian, newton_on, newton_solve, numerical_rank, singular_values, NewtonReport, SolverConfig,
    RANK_REL_THRESHOLD,
};
