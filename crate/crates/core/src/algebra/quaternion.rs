use core::ops::{Add, Mul, Neg, Sub};

/// A quaternion `w + x i + y j + z k` with `ij = k`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    coeffs: [f64; 4],
}

impl Quaternion {
    pub const ONE: Quaternion = Quaternion::new([1.0, 0.0, 0.0, 0.0]);

    pub const fn new(coeffs: [f64; 4]) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64; 4] {
        &self.coeffs
    }

    pub fn conj(&self) -> Quaternion {
        let [w, x, y, z] = self.coeffs;
        Quaternion::new([w, -x, -y, -z])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum()
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        let [a1, b1, c1, d1] = self.coeffs;
        let [a2, b2, c2, d2] = rhs.coeffs;
        Quaternion::new([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        let mut c = self.coeffs;
        for (a, b) in c.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        Quaternion::new(c)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        self + (-rhs)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        let [w, x, y, z] = self.coeffs;
        Quaternion::new([-w, -x, -y, -z])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_units() {
        let i = Quaternion::new([0.0, 1.0, 0.0, 0.0]);
        let j = Quaternion::new([0.0, 0.0, 1.0, 0.0]);
        let k = Quaternion::new([0.0, 0.0, 0.0, 1.0]);
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!(j * i, -k);
        assert_eq!(i * i, -Quaternion::ONE);
        assert_eq!(i * j * k, -Quaternion::ONE);
    }
}
