use thiserror::Error;

/// Errors raised by the algebra, loop, and mechanics layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("octonion has zero norm and no inverse")]
    ZeroNorm,
    #[error("non-finite coefficient in input")]
    NonFinite,
    #[error("norm {0} is too far from 1 to renormalize onto the unit sphere")]
    NotUnit(f64),
    #[error("vector is not tangent at its base point (inner product {0:e})")]
    NotTangent(f64),
    #[error("bracket of imaginary octonions has real part {0:e}")]
    RealPartInBracket(f64),
    #[error("logarithm is undefined at the antipode of the identity")]
    Antipode,
    #[error("mass m_{index} = {value} must be positive")]
    NonPositiveMass { index: usize, value: f64 },
    #[error("covector is not orthogonal to g*h (inner product {0:e})")]
    InvalidCovector(f64),
    #[error("residual became non-finite at iteration {0}")]
    NonFiniteResidual(usize),
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("Hamiltonian flow undefined: {0}")]
    FlowUndefined(&'static str),
    #[error("point does not belong to the loop {0}")]
    NotInLoop(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
