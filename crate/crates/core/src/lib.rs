//! Discrete Lagrangian and Hamiltonian mechanics on smooth loops.
//!
//! The working loop is the Moufang loop of unit octonions (the 7-sphere),
//! with the unit quaternions as an associative control. Octonion arithmetic
//! lives in [`algebra`], the loop structure and its tangent algebra in
//! [`smooth_loop`], discrete Euler-Lagrange dynamics and Legendre maps in
//! [`mechanics`], and the numerical kernels in [`numerics`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod mechanics;
pub mod numerics;
pub mod smooth_loop;

pub use algebra::{associator, Octonion, Quaternion};
pub use error::{Error, Result};
pub use smooth_loop::{
    AlgebraVector, LoopInstance, TangentVector, UnitLoop, UnitOctonion, UnitOctonions, UnitQuaternions,
};
