use core::ops::{Add, Index, Mul, Neg, Sub};

use crate::algebra::Octonion;
use crate::error::{Error, Result};

/// Points within this distance of the unit sphere are accepted and renormalized.
pub const RENORMALIZE_WINDOW: f64 = 1e-6;
/// Tolerance for the tangency invariant of [`TangentVector`].
pub const TANGENCY_EPS: f64 = 1e-10;

/// A point of the loop of unit octonions (the 7-sphere).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitOctonion {
    value: Octonion,
}

impl UnitOctonion {
    pub const ONE: UnitOctonion = UnitOctonion { value: Octonion::ONE };

    /// Renormalizes `value` when its norm is within [`RENORMALIZE_WINDOW`] of 1.
    pub fn new(value: Octonion) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::NonFinite);
        }
        let n = value.norm();
        if libm::fabs(n - 1.0) > RENORMALIZE_WINDOW {
            return Err(Error::NotUnit(n));
        }
        Ok(Self {
            value: value * (1.0 / n),
        })
    }

    /// Projects any nonzero octonion onto the sphere.
    pub fn normalize(value: Octonion) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Self {
            value: value.normalized()?,
        })
    }

    pub fn basis(i: usize) -> Self {
        Self {
            value: Octonion::basis(i),
        }
    }

    pub fn value(&self) -> &Octonion {
        &self.value
    }

    pub fn into_inner(self) -> Octonion {
        self.value
    }

    pub fn conj(&self) -> Self {
        Self {
            value: self.value.conj(),
        }
    }

    /// On the unit sphere the inverse is the conjugate.
    pub fn inv(&self) -> Self {
        self.conj()
    }

    /// Loop product, renormalized to absorb rounding.
    pub fn mul(&self, rhs: &UnitOctonion) -> UnitOctonion {
        let p = self.value * rhs.value;
        Self {
            value: p * (1.0 / p.norm()),
        }
    }

    pub fn distance(&self, rhs: &UnitOctonion) -> f64 {
        self.value.distance(&rhs.value)
    }
}

impl From<UnitOctonion> for Octonion {
    fn from(u: UnitOctonion) -> Octonion {
        u.value
    }
}

/// An imaginary octonion `X = x1 e1 + ... + x7 e7`: an element of the tangent
/// algebra at the identity, and through the inner product also of its dual.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AlgebraVector {
    imag: [f64; 7],
}

impl AlgebraVector {
    pub const ZERO: AlgebraVector = AlgebraVector { imag: [0.0; 7] };

    pub const fn new(imag: [f64; 7]) -> Self {
        Self { imag }
    }

    /// The unit `e_k` for `k ∈ 1..=7`.
    pub fn basis(k: usize) -> Self {
        assert!((1..8).contains(&k), "imaginary basis index must be in 1..=7");
        let mut imag = [0.0; 7];
        imag[k - 1] = 1.0;
        Self { imag }
    }

    /// Drops the real part of `o`.
    pub fn from_octonion(o: &Octonion) -> Self {
        Self { imag: o.imag() }
    }

    pub fn to_octonion(&self) -> Octonion {
        Octonion::from_imag(self.imag)
    }

    pub fn coeffs(&self) -> &[f64; 7] {
        &self.imag
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64; 7] {
        &mut self.imag
    }

    pub fn dot(&self, rhs: &AlgebraVector) -> f64 {
        self.imag.iter().zip(&rhs.imag).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.dot(self))
    }

    pub fn max_abs(&self) -> f64 {
        self.imag.iter().map(|v| libm::fabs(*v)).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.imag.iter().all(|v| v.is_finite())
    }
}

impl Index<usize> for AlgebraVector {
    type Output = f64;
    /// Zero-based: `v[0]` is the coefficient of `e1`.
    fn index(&self, i: usize) -> &f64 {
        &self.imag[i]
    }
}

impl Add for AlgebraVector {
    type Output = AlgebraVector;
    fn add(self, rhs: AlgebraVector) -> AlgebraVector {
        let mut imag = self.imag;
        for (a, b) in imag.iter_mut().zip(rhs.imag) {
            *a += b;
        }
        AlgebraVector { imag }
    }
}

impl Sub for AlgebraVector {
    type Output = AlgebraVector;
    fn sub(self, rhs: AlgebraVector) -> AlgebraVector {
        self + (-rhs)
    }
}

impl Neg for AlgebraVector {
    type Output = AlgebraVector;
    fn neg(self) -> AlgebraVector {
        self * -1.0
    }
}

impl Mul<f64> for AlgebraVector {
    type Output = AlgebraVector;
    fn mul(self, s: f64) -> AlgebraVector {
        let mut imag = self.imag;
        for v in &mut imag {
            *v *= s;
        }
        AlgebraVector { imag }
    }
}

/// A tangent vector to the unit sphere, represented in the ambient algebra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentVector {
    base: UnitOctonion,
    vec: Octonion,
}

impl TangentVector {
    /// Checks `⟨vec, base⟩ = 0` up to [`TANGENCY_EPS`] relative to `‖vec‖`.
    pub fn new(base: UnitOctonion, vec: Octonion) -> Result<Self> {
        let ip = vec.dot(base.value());
        if libm::fabs(ip) > TANGENCY_EPS * vec.norm().max(1.0) {
            return Err(Error::NotTangent(ip));
        }
        Ok(Self { base, vec })
    }

    pub fn zero(base: UnitOctonion) -> Self {
        Self {
            base,
            vec: Octonion::ZERO,
        }
    }

    pub fn base(&self) -> &UnitOctonion {
        &self.base
    }

    pub fn vec(&self) -> &Octonion {
        &self.vec
    }
}
