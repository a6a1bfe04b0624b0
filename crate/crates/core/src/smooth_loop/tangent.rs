//! Prolongations, tangent-algebra brackets, and the exponential chart of the
//! unit octonions.

use core::f64::consts::PI;

use super::points::{AlgebraVector, TangentVector, UnitOctonion};
use crate::algebra::{commutator, Octonion};
use crate::error::{Error, Result};

/// Real parts larger than this in a bracket signal corrupted input.
pub const BRACKET_REAL_EPS: f64 = 1e-12;
/// Step used by [`loop_inverse_diff_check`].
pub const INVERSE_DIFF_STEP: f64 = 1e-5;

/// Left prolongation `lvec X(a) = D_e(l_a)(X) = a X`.
pub fn left_prolong(a: &UnitOctonion, x: &AlgebraVector) -> TangentVector {
    let v = *a.value() * x.to_octonion();
    TangentVector::new(*a, v).expect("a X is tangent at a")
}

/// Right prolongation `rvec X(a) = D_e(r_a)(X) = X a`.
pub fn right_prolong(a: &UnitOctonion, x: &AlgebraVector) -> TangentVector {
    let v = x.to_octonion() * *a.value();
    TangentVector::new(*a, v).expect("X a is tangent at a")
}

fn imaginary(o: Octonion) -> Result<AlgebraVector> {
    if libm::fabs(o.re()) > BRACKET_REAL_EPS {
        return Err(Error::RealPartInBracket(o.re()));
    }
    Ok(AlgebraVector::from_octonion(&o))
}

/// Skew bracket induced by left prolongations: `[X, Y]_l = XY - YX`.
pub fn bracket_left(x: &AlgebraVector, y: &AlgebraVector) -> Result<AlgebraVector> {
    imaginary(commutator(&x.to_octonion(), &y.to_octonion()))
}

/// Skew bracket induced by right prolongations: `[X, Y]_r = YX - XY`.
pub fn bracket_right(x: &AlgebraVector, y: &AlgebraVector) -> Result<AlgebraVector> {
    imaginary(commutator(&y.to_octonion(), &x.to_octonion()))
}

/// Commutator of imaginary octonions without the real-part check.
fn br(x: &AlgebraVector, y: &AlgebraVector) -> AlgebraVector {
    AlgebraVector::from_octonion(&commutator(&x.to_octonion(), &y.to_octonion()))
}

/// Which pair of prolonged fields [`bracket_field_at`] commutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketSide {
    /// `[lvec X, lvec Y](a) = (aX)Y - (aY)X`
    Left,
    /// `[rvec X, rvec Y](a) = Y(Xa) - X(Ya)`
    Right,
    /// `Y(aX) - (Ya)X`, the commutator of a left- and a right-prolonged field.
    Mixed,
}

/// Commutator of prolonged vector fields evaluated at `a`, in closed form.
pub fn bracket_field_value(a: &Octonion, x: &Octonion, y: &Octonion, side: BracketSide) -> Octonion {
    match side {
        BracketSide::Left => (*a * *x) * *y - (*a * *y) * *x,
        BracketSide::Right => *y * (*x * *a) - *x * (*y * *a),
        BracketSide::Mixed => *y * (*a * *x) - (*y * *a) * *x,
    }
}

/// [`bracket_field_value`] on the unit octonions, returned as a tangent vector.
pub fn bracket_field_at(
    a: &UnitOctonion,
    x: &AlgebraVector,
    y: &AlgebraVector,
    side: BracketSide,
) -> Result<TangentVector> {
    let v = bracket_field_value(a.value(), &x.to_octonion(), &y.to_octonion(), side);
    TangentVector::new(*a, v)
}

/// Norm of `[[X,Y],[X,Z]] - [[[X,Y],Z],X] - [[[Y,Z],X],X] - [[[Z,X],X],Y]`.
pub fn malcev_residual(x: &AlgebraVector, y: &AlgebraVector, z: &AlgebraVector) -> f64 {
    let xy = br(x, y);
    let lhs = br(&xy, &br(x, z));
    let rhs = br(&br(&xy, z), x) + br(&br(&br(y, z), x), x) + br(&br(&br(z, x), x), y);
    (lhs - rhs).norm()
}

/// `[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y]`; nonzero because the algebra is not Lie.
pub fn jacobiator(x: &AlgebraVector, y: &AlgebraVector, z: &AlgebraVector) -> AlgebraVector {
    br(&br(x, y), z) + br(&br(y, z), x) + br(&br(z, x), y)
}

/// Coefficient of `∂_{e_i} ∧ ∂_{e_j}` in the linear bivector dual to the
/// bracket, i.e. the components of `[e_i, e_j]_l = 2 e_i e_j`.
pub fn leibniz_coefficient(i: usize, j: usize) -> AlgebraVector {
    br(&AlgebraVector::basis(i), &AlgebraVector::basis(j))
}

/// `exp(X) = cos‖X‖ + sin‖X‖ X/‖X‖`, with `exp(0) = e0`.
pub fn exp_map(x: &AlgebraVector) -> UnitOctonion {
    let n = x.norm();
    if n == 0.0 {
        return UnitOctonion::ONE;
    }
    let o = Octonion::from_real(libm::cos(n)) + x.to_octonion() * (libm::sin(n) / n);
    UnitOctonion::normalize(o).expect("exp lands on the sphere")
}

/// Principal logarithm with `‖X‖ ∈ [0, π)`; undefined at `-e0`.
pub fn log_map(a: &UnitOctonion) -> Result<AlgebraVector> {
    let re = a.value().re();
    let v = AlgebraVector::from_octonion(a.value());
    let s = v.norm();
    if s == 0.0 {
        return if re > 0.0 {
            Ok(AlgebraVector::ZERO)
        } else {
            Err(Error::Antipode)
        };
    }
    let theta = libm::atan2(s, re);
    if theta >= PI {
        return Err(Error::Antipode);
    }
    Ok(v * (theta / s))
}

/// Checks `ι_*(lvec X) = -rvec X ∘ ι` at `a` by central differences of the
/// inversion map along `aX`; returns `‖Dι_a(aX) + X a⁻¹‖`.
pub fn loop_inverse_diff_check(a: &UnitOctonion, x: &AlgebraVector) -> f64 {
    let h = INVERSE_DIFF_STEP;
    let a0 = *a.value();
    let dir = a0 * x.to_octonion();
    let plus = (a0 + dir * h).inv().expect("nonzero");
    let minus = (a0 - dir * h).inv().expect("nonzero");
    let fd = (plus - minus) * (0.5 / h);
    let analytic = x.to_octonion() * a0.conj();
    (fd + analytic).norm()
}

/// Multiplication on the tangent loop: `(g, X_g)(h, Y_h) = (gh, X_g h + g Y_h)`.
pub fn tangent_loop_mul(u: &TangentVector, v: &TangentVector) -> Result<TangentVector> {
    let g = u.base();
    let h = v.base();
    let gh = g.mul(h);
    let w = *u.vec() * *h.value() + *g.value() * *v.vec();
    TangentVector::new(gh, w)
}

/// Norms of the three Moufang differences
/// `((ax)a)y - a(x(ay))`, `((xa)y)a - x(a(ya))`, `(ax)(ya) - (a(xy))a`.
pub fn moufang_residuals(a: &Octonion, x: &Octonion, y: &Octonion) -> [f64; 3] {
    let (a, x, y) = (*a, *x, *y);
    [
        (((a * x) * a) * y - a * (x * (a * y))).norm(),
        (((x * a) * y) * a - x * (a * (y * a))).norm(),
        ((a * x) * (y * a) - (a * (x * y)) * a).norm(),
    ]
}

/// `‖[lvec X, lvec Y](a) - a [X, Y]_l‖`: zero exactly when the left
/// prolongations of `X, Y` bracket like left-invariant fields at `a`.
pub fn left_invariance_defect(a: &Octonion, x: &AlgebraVector, y: &AlgebraVector) -> f64 {
    let field = bracket_field_value(a, &x.to_octonion(), &y.to_octonion(), BracketSide::Left);
    let translated = *a * br(x, y).to_octonion();
    (field - translated).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::RngSpec;

    fn e(i: usize) -> AlgebraVector {
        AlgebraVector::basis(i)
    }

    #[test]
    fn prolongations_at_identity_and_e1() {
        let t = left_prolong(&UnitOctonion::ONE, &e(1));
        assert_eq!(*t.vec(), Octonion::basis(1));
        let t = left_prolong(&UnitOctonion::basis(1), &e(2));
        assert_eq!(*t.vec(), Octonion::basis(3));
        let t = right_prolong(&UnitOctonion::ONE, &e(3));
        assert_eq!(*t.vec(), Octonion::basis(3));
        let t = right_prolong(&UnitOctonion::basis(1), &e(2));
        assert_eq!(*t.vec(), -Octonion::basis(3));
    }

    #[test]
    fn prolongations_are_tangent() {
        let mut s = RngSpec::new(3).sampler();
        for _ in 0..200 {
            let a = s.unit_octonion();
            let x = s.algebra(1.0);
            assert!(libm::fabs(left_prolong(&a, &x).vec().dot(a.value())) < 1e-14);
            assert!(libm::fabs(right_prolong(&a, &x).vec().dot(a.value())) < 1e-14);
        }
    }

    #[test]
    fn basis_brackets() {
        assert_eq!(bracket_left(&e(1), &e(2)).unwrap(), e(3) * 2.0);
        assert_eq!(bracket_right(&e(1), &e(2)).unwrap(), e(3) * -2.0);
        let x = AlgebraVector::new([0.3, -0.2, 0.1, 0.9, 0.0, -0.5, 0.4]);
        assert_eq!(bracket_left(&x, &x).unwrap(), AlgebraVector::ZERO);
        assert_eq!(bracket_right(&x, &x).unwrap(), AlgebraVector::ZERO);
    }

    #[test]
    fn bracket_field_specializations() {
        let x = e(1);
        let y = e(2);
        let left = bracket_field_at(&UnitOctonion::ONE, &x, &y, BracketSide::Left).unwrap();
        assert_eq!(*left.vec(), bracket_left(&x, &y).unwrap().to_octonion());
        let mixed = bracket_field_at(&UnitOctonion::ONE, &x, &y, BracketSide::Mixed).unwrap();
        assert_eq!(*mixed.vec(), Octonion::ZERO);
    }

    #[test]
    fn mixed_bracket_nonzero_somewhere() {
        let mut s = RngSpec::new(5).sampler();
        let a = s.unit_octonion();
        let best = (1..8)
            .flat_map(|i| (1..8).map(move |j| (i, j)))
            .map(|(i, j)| {
                bracket_field_at(&a, &e(i), &e(j), BracketSide::Mixed)
                    .unwrap()
                    .vec()
                    .norm()
            })
            .fold(0.0, f64::max);
        assert!(best > 0.1, "max mixed commutator {best}");
    }

    #[test]
    fn malcev_on_basis_and_degenerate() {
        assert!(malcev_residual(&e(1), &e(2), &e(4)) <= 1e-12);
        let x = AlgebraVector::new([0.3, -0.2, 0.1, 0.9, 0.0, -0.5, 0.4]);
        let z = AlgebraVector::new([-0.1, 0.7, 0.2, 0.0, 0.3, 0.5, -0.4]);
        assert!(malcev_residual(&x, &x, &z) <= 1e-12);
    }

    #[test]
    fn jacobi_fails_on_basis_triple() {
        assert!(jacobiator(&e(1), &e(2), &e(4)).norm() >= 1.0);
        assert_eq!(jacobiator(&e(1), &e(2), &e(3)), AlgebraVector::ZERO);
    }

    #[test]
    fn leibniz_coefficients_match_bracket() {
        assert_eq!(leibniz_coefficient(1, 2), e(3) * 2.0);
        assert_eq!(leibniz_coefficient(2, 1), e(3) * -2.0);
        assert_eq!(leibniz_coefficient(4, 4), AlgebraVector::ZERO);
    }

    #[test]
    fn exp_examples() {
        assert_eq!(exp_map(&AlgebraVector::ZERO), UnitOctonion::ONE);
        let q = exp_map(&(e(1) * (PI / 2.0)));
        assert!(q.value().approx_eq(&Octonion::basis(1), 1e-15));
        let t = 0.3;
        let p = *exp_map(&(e(1) * t)).value() * *exp_map(&(e(2) * t)).value();
        let (c, s) = (libm::cos(t), libm::sin(t));
        let expected = Octonion::from_real(c * c)
            + (Octonion::basis(1) + Octonion::basis(2)) * (s * c)
            + Octonion::basis(3) * (s * s);
        assert!(p.approx_eq(&expected, 1e-15));
    }

    #[test]
    fn log_examples() {
        assert_eq!(log_map(&UnitOctonion::ONE).unwrap(), AlgebraVector::ZERO);
        let x = log_map(&UnitOctonion::basis(1)).unwrap();
        assert!((x - e(1) * (PI / 2.0)).norm() < 1e-15);
        let antipode = UnitOctonion::new(-Octonion::ONE).unwrap();
        assert_eq!(log_map(&antipode), Err(Error::Antipode));
    }

    #[test]
    fn exp_log_round_trip() {
        let mut s = RngSpec::new(9).sampler();
        for _ in 0..1000 {
            let x = s.algebra(PI - 0.1);
            let back = log_map(&exp_map(&x)).unwrap();
            assert!((back - x).norm() <= 1e-10);
        }
    }

    #[test]
    fn inverse_differential() {
        for i in 1..8 {
            assert!(loop_inverse_diff_check(&UnitOctonion::ONE, &e(i)) <= 1e-6);
        }
        assert!(loop_inverse_diff_check(&UnitOctonion::basis(1), &e(2)) <= 1e-6);
        let mut s = RngSpec::new(4).sampler();
        for _ in 0..50 {
            let a = s.unit_octonion();
            for i in 1..8 {
                assert!(loop_inverse_diff_check(&a, &e(i)) <= 1e-6);
            }
        }
    }

    #[test]
    fn tangent_loop_unit_and_fiber_addition() {
        let zero = TangentVector::zero(UnitOctonion::ONE);
        let p = tangent_loop_mul(&zero, &zero).unwrap();
        assert_eq!(*p.base(), UnitOctonion::ONE);
        assert_eq!(*p.vec(), Octonion::ZERO);
        let x = TangentVector::new(UnitOctonion::ONE, Octonion::basis(2)).unwrap();
        let y = TangentVector::new(UnitOctonion::ONE, Octonion::basis(5) * 3.0).unwrap();
        let p = tangent_loop_mul(&x, &y).unwrap();
        assert_eq!(*p.vec(), Octonion::basis(2) + Octonion::basis(5) * 3.0);
    }

    #[test]
    fn tangent_loop_product_is_tangent() {
        let mut s = RngSpec::new(21).sampler();
        for _ in 0..200 {
            let g = s.unit_octonion();
            let h = s.unit_octonion();
            let u = left_prolong(&g, &s.algebra(1.0));
            let v = right_prolong(&h, &s.algebra(1.0));
            let w = tangent_loop_mul(&u, &v).unwrap();
            assert!(libm::fabs(w.vec().dot(w.base().value())) < 1e-12);
        }
    }

    #[test]
    fn moufang_basis_and_identity() {
        let x = Octonion::new([0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8]);
        let y = Octonion::new([0.8, -0.7, 0.6, -0.5, 0.4, -0.3, 0.2, -0.1]);
        assert_eq!(moufang_residuals(&Octonion::ONE, &x, &y), [0.0; 3]);
        let r = moufang_residuals(&Octonion::basis(1), &Octonion::basis(2), &Octonion::basis(4));
        assert!(r.iter().all(|v| *v <= 1e-12));
    }

    #[test]
    fn left_prolongations_not_left_invariant() {
        let a = *exp_map(&(e(4) * 0.9)).value();
        assert!(left_invariance_defect(&a, &e(1), &e(2)) > 0.01);
        assert!(left_invariance_defect(&Octonion::ONE, &e(1), &e(2)) < 1e-15);
    }
}
