//! Octonion arithmetic.
//!
//! Products go through the compiled basis table; the quaternion-pair
//! (Cayley-Dickson) product is kept alongside as an independent route.

mod octonion;
mod quaternion;
mod table;

pub use octonion::{associator, commutator, Octonion, DEFAULT_EPS};
pub use quaternion::Quaternion;
pub use table::{SignedUnit, StructureConstants, MULTIPLICATION_TABLE, POSITIVE_TRIPLES};
