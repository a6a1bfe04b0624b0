use alloc::vec::Vec;

use super::points::UnitOctonion;
use crate::algebra::Octonion;
use crate::error::Result;
use crate::numerics::Sampler;

/// Tolerance on `|‖a‖ - 1|` for membership in the unit loops.
pub const UNIT_EPS: f64 = 1e-10;

/// A smooth inverse loop realized inside the octonions.
///
/// Translations are restrictions of octonion multiplication, so the
/// differential of `l_a` at any point is `v ↦ a v` and that of `r_a` is
/// `v ↦ v a`.
pub trait LoopInstance {
    fn name(&self) -> &'static str;

    /// Dimension of the tangent algebra at the identity.
    fn dim(&self) -> usize;

    fn identity(&self) -> Octonion {
        Octonion::ONE
    }

    fn mul(&self, a: &Octonion, b: &Octonion) -> Octonion {
        *a * *b
    }

    fn inverse(&self, a: &Octonion) -> Result<Octonion> {
        a.inv()
    }

    fn contains(&self, a: &Octonion) -> bool;

    /// The `i`-th basis vector (zero-based) of the tangent algebra.
    fn algebra_basis(&self, i: usize) -> Octonion;

    /// Exponential of a tangent-algebra element.
    fn exp(&self, v: &Octonion) -> Octonion;

    /// `D_e(l_a)(v) = a v`.
    fn left_translation_diff(&self, a: &Octonion, v: &Octonion) -> Octonion {
        self.mul(a, v)
    }

    /// `D_e(r_a)(v) = v a`.
    fn right_translation_diff(&self, a: &Octonion, v: &Octonion) -> Octonion {
        self.mul(v, a)
    }

    /// `Σ ξ_i E_i` over the algebra basis.
    fn algebra_element(&self, xi: &[f64]) -> Octonion {
        debug_assert_eq!(xi.len(), self.dim());
        xi.iter()
            .enumerate()
            .fold(Octonion::ZERO, |acc, (i, &x)| acc + self.algebra_basis(i) * x)
    }

    /// Coordinates of `v` in the algebra basis (orthonormal for every instance here).
    fn algebra_coords(&self, v: &Octonion) -> Vec<f64> {
        (0..self.dim()).map(|i| self.algebra_basis(i).dot(v)).collect()
    }

    /// Left exponential chart `a · exp(Σ ξ_i E_i)`.
    fn chart(&self, a: &Octonion, xi: &[f64]) -> Octonion {
        self.mul(a, &self.exp(&self.algebra_element(xi)))
    }
}

/// Loops whose points are unit octonions and whose tangent algebra is
/// spanned by `e1, ..., e_dim`.
pub trait UnitLoop: LoopInstance {
    fn sample_point(&self, sampler: &mut Sampler) -> UnitOctonion;

    /// Chart map landing back on the sphere.
    fn chart_point(&self, a: &UnitOctonion, xi: &[f64]) -> UnitOctonion {
        let p = self.chart(a.value(), xi);
        UnitOctonion::normalize(p).unwrap_or(*a)
    }
}

/// `exp(v) = cos‖v‖ + sin‖v‖ v/‖v‖` for imaginary `v`.
pub(crate) fn exp_imaginary(v: &Octonion) -> Octonion {
    let v = v.imag_part();
    let n = v.norm();
    if n == 0.0 {
        return Octonion::ONE;
    }
    Octonion::from_real(libm::cos(n)) + v * (libm::sin(n) / n)
}

/// The Moufang loop of unit octonions, diffeomorphic to the 7-sphere.
#[derive(Debug, Clone, Copy, Default)]
pub struct UnitOctonions;

impl LoopInstance for UnitOctonions {
    fn name(&self) -> &'static str {
        "unit-octonions"
    }

    fn dim(&self) -> usize {
        7
    }

    fn inverse(&self, a: &Octonion) -> Result<Octonion> {
        Ok(a.conj())
    }

    fn contains(&self, a: &Octonion) -> bool {
        a.is_finite() && libm::fabs(a.norm() - 1.0) <= UNIT_EPS
    }

    fn algebra_basis(&self, i: usize) -> Octonion {
        assert!(i < 7);
        Octonion::basis(i + 1)
    }

    fn exp(&self, v: &Octonion) -> Octonion {
        exp_imaginary(v)
    }
}

impl UnitLoop for UnitOctonions {
    fn sample_point(&self, sampler: &mut Sampler) -> UnitOctonion {
        sampler.unit_octonion()
    }
}

/// All nonzero octonions.
#[derive(Debug, Clone, Copy, Default)]
pub struct InvertibleOctonions;

impl LoopInstance for InvertibleOctonions {
    fn name(&self) -> &'static str {
        "invertible-octonions"
    }

    fn dim(&self) -> usize {
        8
    }

    fn contains(&self, a: &Octonion) -> bool {
        a.is_finite() && a.norm_sqr() > 0.0
    }

    fn algebra_basis(&self, i: usize) -> Octonion {
        assert!(i < 8);
        Octonion::basis(i)
    }

    /// `exp(s + v) = e^s exp(v)`; the real part commutes with everything.
    fn exp(&self, v: &Octonion) -> Octonion {
        exp_imaginary(v) * libm::exp(v.re())
    }
}

/// Unit quaternions `span{e0, e1, e2, e3} ∩ S⁷`, an associative control.
///
/// Points reuse octonion storage with coefficients 4..7 pinned to zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct UnitQuaternions;

impl LoopInstance for UnitQuaternions {
    fn name(&self) -> &'static str {
        "unit-quaternions"
    }

    fn dim(&self) -> usize {
        3
    }

    fn inverse(&self, a: &Octonion) -> Result<Octonion> {
        Ok(a.conj())
    }

    fn contains(&self, a: &Octonion) -> bool {
        UnitOctonions.contains(a) && a.coeffs()[4..].iter().all(|c| *c == 0.0)
    }

    fn algebra_basis(&self, i: usize) -> Octonion {
        assert!(i < 3);
        Octonion::basis(i + 1)
    }

    fn exp(&self, v: &Octonion) -> Octonion {
        exp_imaginary(v)
    }
}

impl UnitLoop for UnitQuaternions {
    fn sample_point(&self, sampler: &mut Sampler) -> UnitOctonion {
        sampler.unit_quaternion()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::RngSpec;

    fn check_loop_axioms<G: LoopInstance>(lp: &G, points: &[Octonion]) {
        let e = lp.identity();
        for g in points {
            assert!(lp.contains(g), "{} should contain {g}", lp.name());
            assert!(lp.mul(&e, g).approx_eq(g, 1e-12));
            assert!(lp.mul(g, &e).approx_eq(g, 1e-12));
            let gi = lp.inverse(g).unwrap();
            for h in points {
                assert!(lp.mul(&gi, &lp.mul(g, h)).approx_eq(h, 1e-12));
                assert!(lp.mul(&lp.mul(h, g), &gi).approx_eq(h, 1e-12));
            }
        }
    }

    #[test]
    fn loop_axioms_on_every_instance() {
        let mut s = RngSpec::new(11).sampler();
        let units: Vec<_> = (0..20).map(|_| s.unit_octonion().into_inner()).collect();
        check_loop_axioms(&UnitOctonions, &units);
        let quats: Vec<_> = (0..20).map(|_| s.unit_quaternion().into_inner()).collect();
        check_loop_axioms(&UnitQuaternions, &quats);
        let inv: Vec<_> = (0..20)
            .map(|_| s.unit_octonion().into_inner() * s.uniform(0.5, 1.5))
            .collect();
        check_loop_axioms(&InvertibleOctonions, &inv);
    }

    #[test]
    fn membership() {
        assert!(UnitOctonions.contains(&Octonion::basis(7)));
        assert!(!UnitQuaternions.contains(&Octonion::basis(7)));
        assert!(UnitQuaternions.contains(&Octonion::basis(3)));
        assert!(!UnitOctonions.contains(&(Octonion::basis(1) * 2.0)));
        assert!(InvertibleOctonions.contains(&(Octonion::basis(1) * 2.0)));
        assert!(!InvertibleOctonions.contains(&Octonion::ZERO));
    }

    #[test]
    fn chart_at_zero_is_base_point() {
        let a = Octonion::new([0.5, 0.5, 0.5, 0.5, 0.0, 0.0, 0.0, 0.0]);
        assert!(UnitOctonions.chart(&a, &[0.0; 7]).approx_eq(&a, 1e-15));
        assert!(UnitQuaternions.chart(&a, &[0.0; 3]).approx_eq(&a, 1e-15));
    }

    #[test]
    fn invertible_exp_scales_by_real_part() {
        let v = Octonion::from_real(libm::log(2.0));
        assert!(InvertibleOctonions.exp(&v).approx_eq(&Octonion::from_real(2.0), 1e-15));
    }
}
