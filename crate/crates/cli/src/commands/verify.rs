//! Executable identity suites for the algebra, the loop, and the mechanics.

use std::path::Path;

use loopmech_core::algebra::{associator, Octonion};
use loopmech_core::mechanics::{DiscreteSystem, Lagrangian, LegendreSide, Momentum};
use loopmech_core::numerics::{numerical_rank, RngSpec, Sampler, SolverConfig};
use loopmech_core::smooth_loop::{
    bracket_field_value, bracket_left, bracket_right, exp_map, jacobiator, log_map, loop_inverse_diff_check,
    malcev_residual, moufang_residuals, AlgebraVector, BracketSide, UnitOctonion,
};
use serde::Serialize;

use crate::error::CliError;
use crate::output::{emit, to_json};
use crate::parallel::map_ordered;

const SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Loop,
    Mechanics,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    /// Worst value over the samples (largest, or smallest for `>=` bounds).
    pub value: f64,
    pub relation: Relation,
    pub bound: f64,
    pub samples: usize,
    /// The sample that produced `value`, when the check failed.
    pub counterexample: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

struct Check {
    suite: &'static str,
    name: &'static str,
    run: fn(&mut Sampler) -> Outcome,
}

/// Worst value seen, with a description of where.
struct Outcome {
    value: f64,
    relation: Relation,
    bound: f64,
    samples: usize,
    worst: String,
}

impl Outcome {
    fn at_most(bound: f64) -> Self {
        Self {
            value: 0.0,
            relation: Relation::AtMost,
            bound,
            samples: 0,
            worst: String::new(),
        }
    }

    fn at_least(bound: f64) -> Self {
        Self {
            value: f64::NEG_INFINITY,
            relation: Relation::AtLeast,
            bound,
            samples: 0,
            worst: String::new(),
        }
    }

    /// For `<=` bounds keeps the largest value; for `>=` bounds the largest
    /// is also what matters, since one witness suffices.
    fn see(&mut self, v: f64, what: impl FnOnce() -> String) {
        self.samples += 1;
        if v > self.value || v.is_nan() {
            self.value = v;
            self.worst = what();
        }
    }

    fn passed(&self) -> bool {
        match self.relation {
            Relation::AtMost => self.value <= self.bound,
            Relation::AtLeast => self.value >= self.bound,
        }
    }
}

fn c(o: &Octonion) -> String {
    format!("{:?}", o.coeffs())
}

fn e(k: usize) -> AlgebraVector {
    AlgebraVector::basis(k)
}

fn algebra_checks() -> Vec<Check> {
    vec![
        Check {
            suite: "algebra",
            name: "basis products agree with the quaternion-pair construction",
            run: |_| {
                let mut o = Outcome::at_most(0.0);
                for i in 0..8 {
                    for j in 0..8 {
                        let (x, y) = (Octonion::basis(i), Octonion::basis(j));
                        o.see(x.mul_table(&y).max_abs_diff(&x.mul_cayley_dickson(&y)), || {
                            format!("e{i} e{j}")
                        });
                    }
                }
                let (e1, e4, e7) = (Octonion::basis(1), Octonion::basis(4), Octonion::basis(7));
                o.see((e1 * e4 * e7).max_abs_diff(&Octonion::basis(2)), || {
                    "(e1 e4) e7 = e2".into()
                });
                o.see((e1 * (e4 * e7)).max_abs_diff(&-Octonion::basis(2)), || {
                    "e1 (e4 e7) = -e2".into()
                });
                o
            },
        },
        Check {
            suite: "algebra",
            name: "table product equals quaternion-pair product",
            run: |s| {
                let mut o = Outcome::at_most(1e-14);
                for _ in 0..SAMPLES {
                    let (x, y) = (s.unit_octonion().into_inner(), s.unit_octonion().into_inner());
                    o.see(x.mul_table(&y).max_abs_diff(&x.mul_cayley_dickson(&y)), || {
                        format!("{} {}", c(&x), c(&y))
                    });
                }
                o
            },
        },
        Check {
            suite: "algebra",
            name: "norm multiplicativity",
            run: |s| {
                let mut o = Outcome::at_most(1e-12);
                for _ in 0..SAMPLES {
                    let (x, y) = (s.gaussian_octonion(), s.gaussian_octonion());
                    let rel = ((x * y).norm() - x.norm() * y.norm()).abs() / (x.norm() * y.norm());
                    o.see(rel, || format!("{} {}", c(&x), c(&y)));
                }
                o
            },
        },
        Check {
            suite: "algebra",
            name: "alternativity",
            run: |s| {
                let mut o = Outcome::at_most(1e-12);
                for _ in 0..SAMPLES {
                    let (x, y) = (s.unit_octonion().into_inner(), s.unit_octonion().into_inner());
                    let v = associator(&x, &x, &y)
                        .norm()
                        .max(associator(&y, &x, &x).norm())
                        .max(associator(&x, &y, &x).norm());
                    o.see(v, || format!("{} {}", c(&x), c(&y)));
                }
                o
            },
        },
        Check {
            suite: "algebra",
            name: "Moufang identities",
            run: |s| {
                let mut o = Outcome::at_most(1e-12);
                for _ in 0..SAMPLES {
                    let (x, y, z) = (
                        s.unit_octonion().into_inner(),
                        s.unit_octonion().into_inner(),
                        s.unit_octonion().into_inner(),
                    );
                    let v = moufang_residuals(&x, &y, &z).into_iter().fold(0.0, f64::max);
                    o.see(v, || format!("{} {} {}", c(&x), c(&y), c(&z)));
                }
                o
            },
        },
        Check {
            suite: "algebra",
            name: "conjugation reverses products",
            run: |s| {
                let mut o = Outcome::at_most(1e-12);
                for _ in 0..SAMPLES {
                    let (x, y) = (s.unit_octonion().into_inner(), s.unit_octonion().into_inner());
                    o.see((x * y).conj().max_abs_diff(&(y.conj() * x.conj())), || {
                        format!("{} {}", c(&x), c(&y))
                    });
                }
                o
            },
        },
        Check {
            suite: "algebra",
            name: "inverse-loop laws",
            run: |s| {
                let mut o = Outcome::at_most(1e-12);
                for _ in 0..SAMPLES {
                    let (a, b) = (s.unit_octonion().into_inner(), s.unit_octonion().into_inner());
                    let ai = a.inv().expect("unit");
                    let v = (ai * (a * b)).max_abs_diff(&b).max(((b * a) * ai).max_abs_diff(&b));
                    o.see(v, || format!("{} {}", c(&a), c(&b)));
                }
                o
            },
        },
        Check {
            suite: "algebra",
            name: "diassociativity",
            run: |s| {
                let mut o = Outcome::at_most(1e-12);
                for _ in 0..SAMPLES {
                    let (x, y) = (s.unit_octonion().into_inner(), s.unit_octonion().into_inner());
                    let words = [x, y, x * y, y * x, x.conj()];
                    let mut v: f64 = 0.0;
                    for p in &words {
                        for q in &words {
                            for r in &words {
                                v = v.max(associator(p, q, r).norm());
                            }
                        }
                    }
                    o.see(v, || format!("{} {}", c(&x), c(&y)));
                }
                o
            },
        },
        Check {
            suite: "algebra",
            name: "inner product from products",
            run: |s| {
                let mut o = Outcome::at_most(1e-12);
                for _ in 0..SAMPLES {
                    let (x, y) = (s.unit_octonion().into_inner(), s.unit_octonion().into_inner());
                    o.see((x.dot(&y) - x.inner_via_product(&y)).abs(), || {
                        format!("{} {}", c(&x), c(&y))
                    });
                }
                o
            },
        },
    ]
}

fn loop_checks() -> Vec<Check> {
    vec![
        Check {
            suite: "loop",
            name: "left bracket of basis units is twice their product",
            run: |_| {
                let mut o = Outcome::at_most(0.0);
                for i in 1..8 {
                    for j in 1..8 {
                        if i == j {
                            continue;
                        }
                        let b = bracket_left(&e(i), &e(j)).expect("imaginary");
                        let twice = AlgebraVector::from_octonion(&(Octonion::basis(i) * Octonion::basis(j) * 2.0));
                        o.see((b - twice).max_abs(), || format!("e{i} e{j}"));
                    }
                }
                o
            },
        },
        Check {
            suite: "loop",
            name: "right bracket is minus the left bracket",
            run: |s| {
                let mut o = Outcome::at_most(1e-12);
                for _ in 0..SAMPLES {
                    let (x, y) = (s.gaussian_algebra(), s.gaussian_algebra());
                    let v = (bracket_right(&x, &y).expect("imaginary") + bracket_left(&x, &y).expect("imaginary"))
                        .max_abs();
                    o.see(v, || format!("{:?} {:?}", x.coeffs(), y.coeffs()));
                }
                o
            },
        },
        Check {
            suite: "loop",
            name: "Mal'cev identity",
            run: |s| {
                let mut o = Outcome::at_most(1e-10);
                for _ in 0..SAMPLES {
                    let (x, y, z) = (s.algebra(1.0), s.algebra(1.0), s.algebra(1.0));
                    o.see(malcev_residual(&x, &y, &z), || {
                        format!("{:?} {:?} {:?}", x.coeffs(), y.coeffs(), z.coeffs())
                    });
                }
                o
            },
        },
        Check {
            suite: "loop",
            name: "Jacobi identity fails on some basis triple",
            run: |_| {
                let mut o = Outcome::at_least(1.0);
                for i in 1..8 {
                    for j in 1..8 {
                        for k in 1..8 {
                            o.see(jacobiator(&e(i), &e(j), &e(k)).norm(), || format!("e{i} e{j} e{k}"));
                        }
                    }
                }
                o
            },
        },
        Check {
            suite: "loop",
            name: "exp of a quarter turn is the unit",
            run: |_| {
                let mut o = Outcome::at_most(1e-14);
                for k in 1..8 {
                    let v = exp_map(&(e(k) * std::f64::consts::FRAC_PI_2))
                        .value()
                        .max_abs_diff(&Octonion::basis(k));
                    o.see(v, || format!("e{k}"));
                }
                o
            },
        },
        Check {
            suite: "loop",
            name: "exp/log round trip",
            run: |s| {
                let mut o = Outcome::at_most(1e-10);
                for _ in 0..SAMPLES {
                    let x = s.algebra(std::f64::consts::PI - 0.1);
                    let back = log_map(&exp_map(&x)).expect("inside the principal ball");
                    o.see((back - x).max_abs(), || format!("{:?}", x.coeffs()));
                }
                o
            },
        },
        Check {
            suite: "loop",
            name: "inversion differential swaps prolongations",
            run: |s| {
                let mut o = Outcome::at_most(1e-6);
                for _ in 0..1000 {
                    let a = s.unit_octonion();
                    let x = s.algebra(1.0);
                    o.see(loop_inverse_diff_check(&a, &x), || {
                        format!("{} {:?}", c(a.value()), x.coeffs())
                    });
                }
                o
            },
        },
        Check {
            suite: "loop",
            name: "mixed prolongation brackets vanish on quaternions",
            run: |s| {
                let mut o = Outcome::at_most(1e-12);
                for _ in 0..1000 {
                    let a = s.unit_quaternion().into_inner();
                    for i in 1..4 {
                        for j in 1..4 {
                            let v =
                                bracket_field_value(&a, &Octonion::basis(i), &Octonion::basis(j), BracketSide::Mixed)
                                    .norm();
                            o.see(v, || format!("{} e{i} e{j}", c(&a)));
                        }
                    }
                }
                o
            },
        },
    ]
}

fn kinetic(m: f64) -> DiscreteSystem {
    DiscreteSystem::octonionic(Lagrangian::kinetic_uniform(m).expect("positive mass"))
}

fn mechanics_checks() -> Vec<Check> {
    vec![
        Check {
            suite: "mechanics",
            name: "conjugate-pair law for the linear Lagrangian",
            run: |s| {
                let sys = DiscreteSystem::octonionic(Lagrangian::linear());
                let mut o = Outcome::at_most(1e-12);
                for _ in 0..SAMPLES {
                    let a = s.unit_octonion();
                    o.see(sys.el_residual(&a, &a.conj()).max_abs(), || c(a.value()));
                }
                o
            },
        },
        Check {
            suite: "mechanics",
            name: "linear Legendre map is singular at e0",
            run: |_| {
                let sys = DiscreteSystem::octonionic(Lagrangian::linear());
                let mut o = Outcome::at_most(6.0);
                let r = numerical_rank(&sys.legendre_jacobian(&UnitOctonion::ONE, LegendreSide::Minus));
                o.see(r as f64, || "rank at e0".into());
                o
            },
        },
        Check {
            suite: "mechanics",
            name: "kinetic Legendre maps agree for equal masses",
            run: |s| {
                let sys = kinetic(1.0);
                let mut o = Outcome::at_most(1e-10);
                for _ in 0..100 {
                    let a = s.unit_octonion();
                    o.see(
                        (*sys.legendre_plus(&a).covector() - *sys.legendre_minus(&a).covector()).max_abs(),
                        || c(a.value()),
                    );
                }
                o
            },
        },
        Check {
            suite: "mechanics",
            name: "kinetic Legendre Jacobian at e0 is the mass diagonal",
            run: |_| {
                let m = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0];
                let sys = DiscreteSystem::octonionic(Lagrangian::kinetic(m).expect("positive masses"));
                let mut o = Outcome::at_most(1e-5);
                for side in [LegendreSide::Plus, LegendreSide::Minus] {
                    let j = sys.legendre_jacobian(&UnitOctonion::ONE, side);
                    for r in 0..7 {
                        for col in 0..7 {
                            let expected = if r == col { m[r] } else { 0.0 };
                            o.see((j[(r, col)] - expected).abs(), || format!("{side:?} entry ({r},{col})"));
                        }
                    }
                }
                o
            },
        },
        Check {
            suite: "mechanics",
            name: "squared-linear Legendre map vanishes at basis points",
            run: |_| {
                let sys = DiscreteSystem::octonionic(Lagrangian::squared_linear());
                let mut o = Outcome::at_most(1e-12);
                for k in 0..8 {
                    o.see(sys.legendre_minus(&UnitOctonion::basis(k)).covector().max_abs(), || {
                        format!("e{k}")
                    });
                }
                o
            },
        },
        Check {
            suite: "mechanics",
            name: "composability equals the Euler-Lagrange residual",
            run: |s| {
                let mut o = Outcome::at_most(1e-12);
                for sys in [
                    DiscreteSystem::octonionic(Lagrangian::linear()),
                    DiscreteSystem::octonionic(Lagrangian::squared_linear()),
                    kinetic(1.0),
                ] {
                    for _ in 0..1000 {
                        let (g, h) = (s.unit_octonion(), s.unit_octonion());
                        let comp = *sys.target(&sys.dl_lift(&g)).covector() - *sys.source(&sys.dl_lift(&h)).covector();
                        o.see((comp - sys.el_residual(&g, &h)).max_abs(), || {
                            format!("{} {}", c(g.value()), c(h.value()))
                        });
                    }
                }
                o
            },
        },
        Check {
            suite: "mechanics",
            name: "Legendre duality of ranks",
            run: |s| {
                let mut o = Outcome::at_most(0.0);
                for sys in [
                    DiscreteSystem::octonionic(Lagrangian::linear()),
                    DiscreteSystem::octonionic(Lagrangian::squared_linear()),
                    kinetic(1.0),
                ] {
                    for _ in 0..100 {
                        let a = s.unit_octonion();
                        let rp = numerical_rank(&sys.legendre_jacobian(&a, LegendreSide::Plus));
                        let rm = numerical_rank(&sys.legendre_jacobian(&a.inv(), LegendreSide::Minus));
                        o.see((rp as f64 - rm as f64).abs(), || {
                            format!("{} ranks {rp} vs {rm}", c(a.value()))
                        });
                    }
                }
                o
            },
        },
        Check {
            suite: "mechanics",
            name: "kinetic steps near e0 stay put",
            run: |s| {
                let sys = kinetic(1.0);
                let cfg = SolverConfig::default();
                let mut o = Outcome::at_most(1e-10);
                for _ in 0..50 {
                    let a = exp_map(&s.algebra(0.3));
                    let v = match sys.solve_step(&a, &a, &cfg) {
                        Ok(r) if r.converged => r.to.distance(&a),
                        _ => f64::INFINITY,
                    };
                    o.see(v, || c(a.value()));
                }
                o
            },
        },
        Check {
            suite: "mechanics",
            name: "explicit nontrivial kinetic pair",
            run: |s| {
                let sys = kinetic(1.0);
                let (big_a, big_b) = (0.5f64, 3f64.sqrt() / 2.0);
                let mut o = Outcome::at_most(1e-10);
                for _ in 0..100 {
                    let d = s.gaussian_algebra();
                    let ap = d.to_octonion() * ((1.0 - big_a * big_a).sqrt() / d.norm());
                    let a = UnitOctonion::new(Octonion::from_real(big_a) + ap).expect("unit");
                    let b = UnitOctonion::new(Octonion::from_real(big_b) + ap * (big_a / big_b)).expect("unit");
                    o.see(sys.el_residual(&a, &b).norm(), || c(a.value()));
                }
                o
            },
        },
        Check {
            suite: "mechanics",
            name: "kinetic Hamiltonian flow is the identity near zero",
            run: |s| {
                let sys = kinetic(1.0);
                let cfg = SolverConfig::default();
                let mut o = Outcome::at_most(1e-9);
                for _ in 0..20 {
                    let p = Momentum::new(s.algebra(0.1));
                    let v = match sys.hamiltonian_flow(&p, &UnitOctonion::ONE, &cfg) {
                        Ok(q) => (*q.covector() - *p.covector()).max_abs(),
                        Err(_) => f64::INFINITY,
                    };
                    o.see(v, || format!("{:?}", p.covector().coeffs()));
                }
                o
            },
        },
    ]
}

pub fn checks_for(suite: Suite) -> Vec<(&'static str, &'static str)> {
    select(suite).iter().map(|c| (c.suite, c.name)).collect()
}

fn select(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Algebra => algebra_checks(),
        Suite::Loop => loop_checks(),
        Suite::Mechanics => mechanics_checks(),
        Suite::All => {
            let mut v = algebra_checks();
            v.extend(loop_checks());
            v.extend(mechanics_checks());
            v
        }
    }
}

/// Runs every check of the suite on up to `threads` workers. Check `i`
/// draws from the stream seeded with `seed + i`.
pub fn compute(suite: Suite, seed: u64, threads: usize) -> VerifyReport {
    let indexed: Vec<(u64, Check)> = select(suite)
        .into_iter()
        .enumerate()
        .map(|(i, c)| (seed.wrapping_add(i as u64), c))
        .collect();
    let checks = map_ordered(&indexed, threads, |(s, check)| {
        let mut sampler = RngSpec::new(*s).sampler();
        let o = (check.run)(&mut sampler);
        let passed = o.passed();
        CheckResult {
            suite: check.suite,
            name: check.name,
            passed,
            value: o.value,
            relation: o.relation,
            bound: o.bound,
            samples: o.samples,
            counterexample: (!passed).then_some(o.worst),
        }
    });
    VerifyReport {
        suite,
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

pub fn summary(r: &VerifyReport) -> String {
    let mut s = String::new();
    for c in &r.checks {
        let rel = match c.relation {
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
        };
        s.push_str(&format!(
            "{} [{}] {}: {:.3e} {rel} {:.0e} ({} samples)\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.suite,
            c.name,
            c.value,
            c.bound,
            c.samples
        ));
    }
    let failed = r.checks.iter().filter(|c| !c.passed).count();
    s.push_str(&format!(
        "{} of {} checks passed\n",
        r.checks.len() - failed,
        r.checks.len()
    ));
    if let Some(first) = r.checks.iter().find(|c| !c.passed) {
        s.push_str(&format!(
            "first counterexample ({}): {}\n",
            first.name,
            first.counterexample.as_deref().unwrap_or("")
        ));
    }
    s
}

pub fn run(suite: Suite, seed: u64, threads: usize, report: Option<&Path>) -> Result<(), CliError> {
    let r = compute(suite, seed, threads);
    emit(None, &summary(&r))?;
    if let Some(p) = report {
        emit(Some(p), &to_json(&r))?;
    }
    if r.passed {
        Ok(())
    } else {
        let failed = r.checks.iter().filter(|c| !c.passed).count();
        Err(CliError::CheckFailed(format!("{failed} check(s) failed")))
    }
}
