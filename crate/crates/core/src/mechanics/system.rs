use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};

use super::cotangent::{CotangentPoint, Momentum};
use super::lagrangian::Lagrangian;
use crate::algebra::Octonion;
use crate::error::{Error, Result};
use crate::numerics::{fd_jacobian, newton_on, numerical_rank, SolverConfig};
use crate::smooth_loop::{AlgebraVector, UnitLoop, UnitOctonion, UnitOctonions};

/// Which discrete Legendre transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegendreSide {
    /// `𝔽⁺L(a)_i = ⟨∇L(a), a e_i⟩`
    Plus,
    /// `𝔽⁻L(a)_i = ⟨∇L(a), e_i a⟩`
    Minus,
}

/// Result of one discrete Euler-Lagrange step `a ↦ b`.
#[derive(Debug, Clone, PartialEq)]
pub struct ElStepReport {
    pub from: UnitOctonion,
    pub to: UnitOctonion,
    pub residual: AlgebraVector,
    pub residual_norm: f64,
    pub converged: bool,
    pub iterations: usize,
    /// Converged on a branch where the residual Jacobian is rank-deficient.
    pub degenerate_branch: bool,
}

/// A Lagrangian on a unit loop, with its discrete dynamics.
#[derive(Debug, Clone)]
pub struct DiscreteSystem<G = UnitOctonions> {
    space: G,
    lagrangian: Lagrangian,
}

impl DiscreteSystem<UnitOctonions> {
    pub fn octonionic(lagrangian: Lagrangian) -> Self {
        Self::new(UnitOctonions, lagrangian)
    }
}

impl<G: UnitLoop> DiscreteSystem<G> {
    pub fn new(space: G, lagrangian: Lagrangian) -> Self {
        Self { space, lagrangian }
    }

    pub fn space(&self) -> &G {
        &self.space
    }

    pub fn lagrangian(&self) -> &Lagrangian {
        &self.lagrangian
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn pair_left(&self, grad: &Octonion, a: &Octonion) -> AlgebraVector {
        let mut out = AlgebraVector::ZERO;
        for i in 0..self.dim() {
            out.coeffs_mut()[i] = grad.dot(&(*a * self.space.algebra_basis(i)));
        }
        out
    }

    fn pair_right(&self, grad: &Octonion, a: &Octonion) -> AlgebraVector {
        let mut out = AlgebraVector::ZERO;
        for i in 0..self.dim() {
            out.coeffs_mut()[i] = grad.dot(&(self.space.algebra_basis(i) * *a));
        }
        out
    }

    /// Component `i` is `⟨∇L(a), a e_i⟩ - ⟨∇L(b), e_i b⟩`. Components past
    /// the loop dimension are zero.
    pub fn el_residual(&self, a: &UnitOctonion, b: &UnitOctonion) -> AlgebraVector {
        let ga = self.lagrangian.ambient_grad(a.value());
        let gb = self.lagrangian.ambient_grad(b.value());
        self.pair_left(&ga, a.value()) - self.pair_right(&gb, b.value())
    }

    pub fn legendre_plus(&self, a: &UnitOctonion) -> Momentum {
        let g = self.lagrangian.ambient_grad(a.value());
        Momentum::new(self.pair_left(&g, a.value()))
    }

    pub fn legendre_minus(&self, a: &UnitOctonion) -> Momentum {
        let g = self.lagrangian.ambient_grad(a.value());
        Momentum::new(self.pair_right(&g, a.value()))
    }

    pub fn legendre(&self, a: &UnitOctonion, side: LegendreSide) -> Momentum {
        match side {
            LegendreSide::Plus => self.legendre_plus(a),
            LegendreSide::Minus => self.legendre_minus(a),
        }
    }

    fn truncate(&self, v: &AlgebraVector) -> DVector<f64> {
        DVector::from_column_slice(&v.coeffs()[..self.dim()])
    }

    /// Jacobian of a Legendre map in the chart `ξ ↦ a exp(ξ)`, with the
    /// default finite-difference step.
    pub fn legendre_jacobian(&self, a: &UnitOctonion, side: LegendreSide) -> DMatrix<f64> {
        self.legendre_jacobian_with_step(a, side, SolverConfig::default().fd_step)
    }

    pub fn legendre_jacobian_with_step(&self, a: &UnitOctonion, side: LegendreSide, h: f64) -> DMatrix<f64> {
        let zero = DVector::zeros(self.dim());
        fd_jacobian(
            |xi| {
                let p = self.space.chart_point(a, xi.as_slice());
                self.truncate(self.legendre(&p, side).covector())
            },
            &zero,
            h,
        )
    }

    /// Full rank of the Legendre Jacobian at `a`.
    pub fn is_regular_at(&self, a: &UnitOctonion, side: LegendreSide) -> bool {
        numerical_rank(&self.legendre_jacobian(a, side)) == self.dim()
    }

    /// Solves `el_residual(a, b) = 0` for `b` by Newton iteration in the
    /// chart `b = b_cur exp(ξ)`, starting at `guess`. Failure to converge is
    /// reported in the result, not as an error.
    pub fn solve_step(&self, a: &UnitOctonion, guess: &UnitOctonion, cfg: &SolverConfig) -> Result<ElStepReport> {
        let (b, rep) = newton_on(
            *guess,
            self.dim(),
            |b: &UnitOctonion| self.truncate(&self.el_residual(a, b)),
            |b: &UnitOctonion, xi: &DVector<f64>| self.space.chart_point(b, xi.as_slice()),
            cfg,
        )?;
        let residual = self.el_residual(a, &b);
        Ok(ElStepReport {
            from: *a,
            to: b,
            residual_norm: residual.norm(),
            residual,
            converged: rep.converged,
            iterations: rep.iterations,
            degenerate_branch: rep.converged && rep.rank_deficient(),
        })
    }

    /// Iterates [`solve_step`](Self::solve_step) with `guess(a)` as the
    /// starting point; stops early at the first non-converged step. The
    /// returned reports are in order; the caller decides what a failed step
    /// means.
    pub fn trajectory<F>(
        &self,
        a0: &UnitOctonion,
        steps: usize,
        mut guess: F,
        cfg: &SolverConfig,
    ) -> Result<Vec<ElStepReport>>
    where
        F: FnMut(&UnitOctonion) -> UnitOctonion,
    {
        let mut out = Vec::with_capacity(steps);
        let mut a = *a0;
        for _ in 0..steps {
            let rep = self.solve_step(&a, &guess(&a), cfg)?;
            let done = !rep.converged;
            a = rep.to;
            out.push(rep);
            if done {
                break;
            }
        }
        Ok(out)
    }

    /// `dL(a)`: the ambient gradient projected onto the tangent space at `a`.
    pub fn dl_lift(&self, a: &UnitOctonion) -> CotangentPoint {
        let g = self.lagrangian.ambient_grad(a.value());
        let cov = g - *a.value() * g.dot(a.value());
        CotangentPoint::new(*a, cov).expect("projection is tangent")
    }

    /// Target map `β` restricted to the loop's tangent algebra.
    pub fn target(&self, p: &CotangentPoint) -> Momentum {
        Momentum::new(self.pair_left(p.covector(), p.base().value()))
    }

    /// Source map `α` restricted to the loop's tangent algebra.
    pub fn source(&self, p: &CotangentPoint) -> Momentum {
        Momentum::new(self.pair_right(p.covector(), p.base().value()))
    }

    /// `𝔽⁺L ∘ (𝔽⁻L)⁻¹` at `p`, inverting `𝔽⁻L` by Newton iteration from `seed`.
    pub fn hamiltonian_flow(&self, p: &Momentum, seed: &UnitOctonion, cfg: &SolverConfig) -> Result<Momentum> {
        if !p.is_finite() {
            return Err(Error::NonFinite);
        }
        let target = self.truncate(p.covector());
        let (g, rep) = newton_on(
            *seed,
            self.dim(),
            |g: &UnitOctonion| self.truncate(self.legendre_minus(g).covector()) - &target,
            |g: &UnitOctonion, xi: &DVector<f64>| self.space.chart_point(g, xi.as_slice()),
            cfg,
        )?;
        if !rep.converged {
            return Err(Error::FlowUndefined("Legendre inversion did not converge"));
        }
        if rep.rank_deficient() {
            return Err(Error::FlowUndefined("Legendre map is singular at the preimage"));
        }
        Ok(self.legendre_plus(&g))
    }
}
