use loopmech_core::algebra::Octonion;
use loopmech_core::mechanics::{DiscreteSystem, Lagrangian, LegendreSide, OracleConfig};
use loopmech_core::numerics::{numerical_rank, RngSpec, SolverConfig};
use loopmech_core::smooth_loop::{exp_map, LoopInstance, UnitLoop, UnitOctonion, UnitQuaternions};

fn perturbed(b: &UnitOctonion, radius: f64, s: &mut loopmech_core::numerics::Sampler) -> UnitOctonion {
    b.mul(&exp_map(&s.algebra(radius)))
}

#[test]
fn conjugate_pair_law_for_linear_lagrangian() {
    let sys = DiscreteSystem::octonionic(Lagrangian::linear());
    let mut s = RngSpec::new(100).sampler();
    for _ in 0..10_000 {
        let a = s.unit_octonion();
        assert!(sys.el_residual(&a, &a.conj()).max_abs() <= 1e-12);
    }
}

#[test]
fn kinetic_recurrence_holds_on_converged_pairs() {
    let sys = DiscreteSystem::octonionic(Lagrangian::kinetic_uniform(1.0).unwrap());
    let cfg = SolverConfig::default();
    let mut s = RngSpec::new(101).sampler();
    let mut converged = 0;
    for _ in 0..200 {
        let a = s.unit_octonion();
        let guess = perturbed(&a, 0.4, &mut s);
        let rep = sys.solve_step(&a, &guess, &cfg).unwrap();
        if !rep.converged {
            continue;
        }
        converged += 1;
        let (x, y) = (a.value().coeffs(), rep.to.value().coeffs());
        for i in 1..8 {
            assert!((x[i] * x[0] - y[i] * y[0]).abs() <= 1e-8, "{x:?} {y:?}");
        }
    }
    assert!(converged >= 150, "{converged}");
}

#[test]
fn kinetic_solutions_do_not_depend_on_a_uniform_mass() {
    let light = DiscreteSystem::octonionic(Lagrangian::kinetic_uniform(1.0).unwrap());
    let heavy = DiscreteSystem::octonionic(Lagrangian::kinetic_uniform(2.5).unwrap());
    let cfg = SolverConfig::default();
    let mut s = RngSpec::new(102).sampler();
    for _ in 0..100 {
        let a = s.unit_octonion();
        let guess = perturbed(&a, 0.4, &mut s);
        let r1 = light.solve_step(&a, &guess, &cfg).unwrap();
        let r2 = heavy.solve_step(&a, &guess, &cfg).unwrap();
        assert!(r1.converged && r2.converged);
        assert!(heavy.el_residual(&a, &r1.to).norm() <= 10.0 * cfg.tol);
        assert!(light.el_residual(&a, &r2.to).norm() <= 10.0 * cfg.tol);
    }
}

#[test]
fn unequal_masses_change_the_solution_set() {
    let sys = DiscreteSystem::octonionic(Lagrangian::kinetic([1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0]).unwrap());
    let mut s = RngSpec::new(103).sampler();
    let (big_a, big_b): (f64, f64) = (0.5, 3f64.sqrt() / 2.0);
    let d = s.gaussian_algebra();
    let ap = d.to_octonion() * ((1.0 - big_a * big_a).sqrt() / d.norm());
    let a = UnitOctonion::new(Octonion::from_real(big_a) + ap).unwrap();
    let b = UnitOctonion::new(Octonion::from_real(big_b) + ap * (big_a / big_b)).unwrap();
    assert!(sys.el_residual(&a, &b).norm() > 1e-3);
    assert!(sys.el_residual(&a, &a).norm() > 1e-3);
}

#[test]
fn squared_linear_recurrence_holds_on_converged_pairs() {
    let sys = DiscreteSystem::octonionic(Lagrangian::squared_linear());
    let cfg = SolverConfig::default();
    let mut s = RngSpec::new(104).sampler();
    let mut converged = 0;
    for _ in 0..200 {
        let a = s.unit_octonion();
        let c = a.value().coeffs();
        let mut mirror = [0.0; 8];
        mirror[0] = c[0];
        mirror[1] = c[1];
        for j in 2..8 {
            mirror[j] = -c[j];
        }
        let exact = UnitOctonion::new(Octonion::new(mirror)).unwrap();
        assert!(sys.el_residual(&a, &exact).norm() <= 1e-12);
        let rep = sys.solve_step(&a, &perturbed(&exact, 0.05, &mut s), &cfg).unwrap();
        if !rep.converged {
            continue;
        }
        converged += 1;
        let y = rep.to.value().coeffs();
        assert!((c[1] * c[0] - y[1] * y[0]).abs() <= 1e-8);
        for j in 2..8 {
            assert!((c[1] * c[j] + y[1] * y[j]).abs() <= 1e-8);
        }
    }
    assert!(converged >= 150, "{converged}");
}

#[test]
fn every_builtin_lagrangian_has_singular_points() {
    let systems = [
        DiscreteSystem::octonionic(Lagrangian::linear()),
        DiscreteSystem::octonionic(Lagrangian::squared_linear()),
        DiscreteSystem::octonionic(Lagrangian::kinetic([1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0]).unwrap()),
    ];
    let mut candidates: Vec<UnitOctonion> = (0..8).map(UnitOctonion::basis).collect();
    candidates.push(UnitOctonion::normalize(Octonion::basis(0) + Octonion::basis(1)).unwrap());
    for sys in &systems {
        let singular = candidates.iter().any(|a| !sys.is_regular_at(a, LegendreSide::Plus));
        assert!(singular, "{}", sys.lagrangian().label());
    }
}

#[test]
fn oracle_confirms_solver_branch() {
    let sys = DiscreteSystem::octonionic(Lagrangian::kinetic_uniform(1.0).unwrap());
    let cfg = SolverConfig::default();
    let mut s = RngSpec::new(105).sampler();
    for _ in 0..3 {
        let a = exp_map(&s.algebra(0.3));
        let rep = sys.solve_step(&a, &a, &cfg).unwrap();
        assert!(rep.converged);
        let ocfg = OracleConfig {
            centers: vec![a],
            radius: 0.5,
            ..OracleConfig::default()
        };
        let sols = sys.brute_oracle(&a, &ocfg).unwrap();
        assert!(sols.iter().any(|b| b.distance(&rep.to) <= 1e-6), "{sols:?}");
        assert!(sols.iter().all(|b| b.distance(&a) <= 1e-4), "{sols:?}");
    }
}

#[test]
fn oracle_samples_the_imaginary_continuum() {
    let sys = DiscreteSystem::octonionic(Lagrangian::kinetic_uniform(1.0).unwrap());
    let a = UnitOctonion::normalize(Octonion::new([0.0, 0.3, -0.5, 0.2, 0.7, -0.1, 0.4, 0.6])).unwrap();
    let sols = sys
        .brute_oracle(
            &a,
            &OracleConfig {
                centers: vec![a],
                ..OracleConfig::default()
            },
        )
        .unwrap();
    assert!(sols.len() >= 10, "{}", sols.len());
    for b in &sols {
        assert!(b.value().re().abs() <= 1e-8, "{b:?}");
    }
}

#[test]
fn quaternion_control_has_no_mixed_brackets_and_trivial_flow() {
    use loopmech_core::smooth_loop::{bracket_field_value, BracketSide};
    let sys = DiscreteSystem::new(UnitQuaternions, Lagrangian::kinetic_uniform(1.0).unwrap());
    let cfg = SolverConfig::default();
    let mut s = RngSpec::new(106).sampler();
    for _ in 0..100 {
        let a = sys.space().sample_point(&mut s);
        for i in 0..3 {
            for j in 0..3 {
                let x = sys.space().algebra_basis(i);
                let y = sys.space().algebra_basis(j);
                assert!(bracket_field_value(a.value(), &x, &y, BracketSide::Mixed).norm() <= 1e-10);
            }
        }
        let rp = numerical_rank(&sys.legendre_jacobian(&a, LegendreSide::Plus));
        let rm = numerical_rank(&sys.legendre_jacobian(&a.inv(), LegendreSide::Minus));
        assert_eq!(rp, rm);
    }
    for _ in 0..20 {
        let a = exp_map(&{
            let mut v = s.algebra(0.3);
            v.coeffs_mut()[3..].fill(0.0);
            v
        });
        let rep = sys.solve_step(&a, &a, &cfg).unwrap();
        assert!(rep.converged && rep.to.distance(&a) <= 1e-10);
        let via = sys
            .hamiltonian_flow(&sys.legendre_plus(&a), &UnitOctonion::ONE, &cfg)
            .unwrap();
        assert!((*via.covector() - *sys.legendre_plus(&a).covector()).max_abs() <= 1e-9);
    }
}
