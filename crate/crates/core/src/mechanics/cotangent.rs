use crate::algebra::Octonion;
use crate::error::{Error, Result};
use crate::smooth_loop::{AlgebraVector, UnitOctonion, TANGENCY_EPS};

/// Precondition tolerance for [`cotangent_obstruction`].
pub const COVECTOR_EPS: f64 = 1e-8;

/// An element of the dual tangent algebra, identified with the algebra by
/// the inner product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Momentum {
    covector: AlgebraVector,
}

impl Momentum {
    pub fn new(covector: AlgebraVector) -> Self {
        Self { covector }
    }

    pub fn covector(&self) -> &AlgebraVector {
        &self.covector
    }

    pub fn is_finite(&self) -> bool {
        self.covector.is_finite()
    }
}

/// A covector at a point of the unit octonions, represented by an octonion
/// orthogonal to the base point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CotangentPoint {
    base: UnitOctonion,
    covector: Octonion,
}

impl CotangentPoint {
    pub fn new(base: UnitOctonion, covector: Octonion) -> Result<Self> {
        let ip = covector.dot(base.value());
        if libm::fabs(ip) > TANGENCY_EPS * covector.norm().max(1.0) {
            return Err(Error::InvalidCovector(ip));
        }
        Ok(Self { base, covector })
    }

    pub fn base(&self) -> &UnitOctonion {
        &self.base
    }

    pub fn covector(&self) -> &Octonion {
        &self.covector
    }
}

/// Target map `β(μ_g)_i = ⟨μ, g e_i⟩` on the unit octonions.
pub fn target_map(p: &CotangentPoint) -> Momentum {
    let g = p.base.value();
    Momentum::new(AlgebraVector::new(core::array::from_fn(|i| {
        p.covector.dot(&(*g * Octonion::basis(i + 1)))
    })))
}

/// Source map `α(ν_h)_i = ⟨ν, e_i h⟩` on the unit octonions.
pub fn source_map(p: &CotangentPoint) -> Momentum {
    let h = p.base.value();
    Momentum::new(AlgebraVector::new(core::array::from_fn(|i| {
        p.covector.dot(&(Octonion::basis(i + 1) * *h))
    })))
}

/// `‖g⁻¹(θ h⁻¹) - (g⁻¹θ) h⁻¹‖`: how far the two candidate translations of a
/// covector at `gh` back to the identity disagree.
pub fn cotangent_obstruction(g: &UnitOctonion, h: &UnitOctonion, theta: &Octonion) -> Result<f64> {
    let gh = *g.value() * *h.value();
    let ip = theta.dot(&gh);
    if libm::fabs(ip) > COVECTOR_EPS {
        return Err(Error::InvalidCovector(ip));
    }
    let gi = g.inv().into_inner();
    let hi = h.inv().into_inner();
    let first = gi * (*theta * hi);
    let second = (gi * *theta) * hi;
    Ok((first - second).norm())
}
