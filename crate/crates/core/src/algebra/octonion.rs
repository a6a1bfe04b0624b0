use core::fmt;
use core::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use super::quaternion::Quaternion;
use super::table::MULTIPLICATION_TABLE;
use crate::error::{Error, Result};

/// Default tolerance for [`Octonion::approx_eq`].
pub const DEFAULT_EPS: f64 = 1e-12;

/// An octonion `c0 e0 + c1 e1 + ... + c7 e7`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Octonion {
    coeffs: [f64; 8],
}

impl Octonion {
    pub const ZERO: Octonion = Octonion { coeffs: [0.0; 8] };
    pub const ONE: Octonion = Octonion::basis(0);

    pub const fn new(coeffs: [f64; 8]) -> Self {
        Self { coeffs }
    }

    /// Like [`Octonion::new`] but rejects NaN and infinite coefficients.
    pub fn try_new(coeffs: [f64; 8]) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_finite()) {
            Ok(Self { coeffs })
        } else {
            Err(Error::NonFinite)
        }
    }

    /// The basis unit `e_i`.
    pub const fn basis(i: usize) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[i] = 1.0;
        Self { coeffs }
    }

    pub fn from_real(r: f64) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[0] = r;
        Self { coeffs }
    }

    /// Purely imaginary octonion with the given `e1..e7` coefficients.
    pub fn from_imag(imag: [f64; 7]) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[1..].copy_from_slice(&imag);
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64; 8] {
        &self.coeffs
    }

    pub fn re(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn imag(&self) -> [f64; 7] {
        let mut out = [0.0; 7];
        out.copy_from_slice(&self.coeffs[1..]);
        out
    }

    pub fn imag_part(&self) -> Octonion {
        let mut c = self.coeffs;
        c[0] = 0.0;
        Octonion::new(c)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    /// Product through the compiled basis table.
    pub fn mul_table(&self, rhs: &Octonion) -> Octonion {
        let mut out = [0.0; 8];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let u = MULTIPLICATION_TABLE[i][j];
                out[u.index as usize] += f64::from(u.sign) * a * b;
            }
        }
        Octonion::new(out)
    }

    /// Product through the quaternion-pair formula
    /// `(a, b)(c, d) = (ac - d*b, da + bc*)`.
    pub fn mul_cayley_dickson(&self, rhs: &Octonion) -> Octonion {
        let (a, b) = self.to_quaternion_pair();
        let (c, d) = rhs.to_quaternion_pair();
        let first = a * c - d.conj() * b;
        let second = d * a + b * c.conj();
        Octonion::from_quaternion_pair(first, second)
    }

    /// Splits `c0..c3` and `c4..c7` into the pair `(a, b)` with `e4 = (0, 1)`.
    pub fn to_quaternion_pair(&self) -> (Quaternion, Quaternion) {
        let c = &self.coeffs;
        (
            Quaternion::new([c[0], c[1], c[2], c[3]]),
            Quaternion::new([c[4], c[5], c[6], c[7]]),
        )
    }

    pub fn from_quaternion_pair(a: Quaternion, b: Quaternion) -> Self {
        let (x, y) = (a.coeffs(), b.coeffs());
        Octonion::new([x[0], x[1], x[2], x[3], y[0], y[1], y[2], y[3]])
    }

    pub fn conj(&self) -> Octonion {
        let mut c = self.coeffs;
        for v in &mut c[1..] {
            *v = -*v;
        }
        Octonion::new(c)
    }

    /// Euclidean inner product of the coefficient vectors.
    pub fn dot(&self, rhs: &Octonion) -> f64 {
        self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a * b).sum()
    }

    /// Inner product evaluated as the real part of `(g h* + h g*) / 2`.
    pub fn inner_via_product(&self, rhs: &Octonion) -> f64 {
        0.5 * ((*self * rhs.conj()).re() + (*rhs * self.conj()).re())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// `g⁻¹ = g* / ‖g‖²`.
    pub fn inv(&self) -> Result<Octonion> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::ZeroNorm);
        }
        if !n2.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(self.conj() * (1.0 / n2))
    }

    pub fn normalized(&self) -> Result<Octonion> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroNorm);
        }
        Ok(*self * (1.0 / n))
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, rhs: &Octonion) -> f64 {
        self.coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| libm::fabs(a - b))
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, rhs: &Octonion, eps: f64) -> bool {
        self.max_abs_diff(rhs) <= eps
    }

    pub fn distance(&self, rhs: &Octonion) -> f64 {
        (*self - *rhs).norm()
    }
}

/// `[g, h, k] = (gh)k - g(hk)`.
pub fn associator(g: &Octonion, h: &Octonion, k: &Octonion) -> Octonion {
    (*g * *h) * *k - *g * (*h * *k)
}

/// `gh - hg`.
pub fn commutator(g: &Octonion, h: &Octonion) -> Octonion {
    *g * *h - *h * *g
}

impl Index<usize> for Octonion {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.coeffs[i]
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        let mut c = self.coeffs;
        for (a, b) in c.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        Octonion::new(c)
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        *self = *self + rhs;
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        let mut c = self.coeffs;
        for (a, b) in c.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
        Octonion::new(c)
    }
}

impl SubAssign for Octonion {
    fn sub_assign(&mut self, rhs: Octonion) {
        *self = *self - rhs;
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        self * -1.0
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, s: f64) -> Octonion {
        let mut c = self.coeffs;
        for v in &mut c {
            *v *= s;
        }
        Octonion::new(c)
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;
    fn mul(self, o: Octonion) -> Octonion {
        o * self
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        self.mul_table(&rhs)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
