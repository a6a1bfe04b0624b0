//! Discrete Euler-Lagrange dynamics on a unit loop: Lagrangians, residuals,
//! Legendre transforms, the source and target maps on the cotangent bundle,
//! the Hamiltonian flow, and the obstruction to multiplying covectors.

mod cotangent;
mod lagrangian;
mod oracle;
mod system;

pub use cotangent::{cotangent_obstruction, source_map, target_map, CotangentPoint, Momentum, COVECTOR_EPS};
pub use lagrangian::{Lagrangian, LagrangianKind};
pub use oracle::OracleConfig;
pub use system::{DiscreteSystem, ElStepReport, LegendreSide};
