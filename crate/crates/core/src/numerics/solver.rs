use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Singular values below this fraction of the largest count as zero.
pub const RANK_REL_THRESHOLD: f64 = 1e-7;

/// Backtracking halvings tried before a step is accepted regardless.
const MAX_BACKTRACKS: usize = 12;

/// Configuration shared by every Newton-type solve in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Converged once the residual norm is at most this.
    pub tol: f64,
    pub max_iter: usize,
    /// Central-difference step for Jacobians.
    pub fd_step: f64,
    /// Step shrink factor for backtracking and for the least-squares fallback.
    pub damping: f64,
    /// Largest step accepted in one iteration.
    pub chart_clamp: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 50,
            fd_step: 1e-6,
            damping: 0.5,
            chart_clamp: FRAC_PI_2,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidConfig("tol must be positive"));
        }
        if self.max_iter < 1 {
            return Err(Error::InvalidConfig("max_iter must be at least 1"));
        }
        if !(self.fd_step > 0.0 && self.fd_step < 1e-2) {
            return Err(Error::InvalidConfig("fd_step must lie in (0, 1e-2)"));
        }
        if !(self.damping > 0.0 && self.damping < 1.0) {
            return Err(Error::InvalidConfig("damping must lie in (0, 1)"));
        }
        if self.chart_clamp.is_nan() || self.chart_clamp <= 0.0 {
            return Err(Error::InvalidConfig("chart_clamp must be positive"));
        }
        Ok(())
    }
}

/// Central-difference Jacobian: column `j` is `(f(x + h e_j) - f(x - h e_j)) / 2h`.
pub fn fd_jacobian<F>(mut f: F, x: &DVector<f64>, h: f64) -> DMatrix<f64>
where
    F: FnMut(&DVector<f64>) -> DVector<f64>,
{
    assert!(h > 0.0, "finite-difference step must be positive");
    let n = x.len();
    let mut cols: Vec<DVector<f64>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut xp = x.clone();
        let mut xm = x.clone();
        xp[j] += h;
        xm[j] -= h;
        // exactly representable spacing
        let span = xp[j] - xm[j];
        cols.push((f(&xp) - f(&xm)) / span);
    }
    let m = cols.first().map_or(0, |c| c.len());
    DMatrix::from_fn(m, n, |i, j| cols[j][i])
}

pub fn singular_values(m: &DMatrix<f64>) -> DVector<f64> {
    m.clone().svd(false, false).singular_values
}

/// Rank with a cutoff of [`RANK_REL_THRESHOLD`] times the largest singular value.
pub fn numerical_rank(m: &DMatrix<f64>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let sv = singular_values(m);
    let smax = sv.max();
    if smax == 0.0 {
        return 0;
    }
    sv.iter().filter(|s| **s > RANK_REL_THRESHOLD * smax).count()
}

/// Outcome of a Newton solve.
#[derive(Debug, Clone, PartialEq)]
pub struct NewtonReport {
    pub iterations: usize,
    pub residual_norm: f64,
    pub converged: bool,
    /// Rank of the Jacobian at the returned point.
    pub final_rank: usize,
    pub dim: usize,
    /// Residual norm before the first and after every iteration.
    pub history: Vec<f64>,
}

impl NewtonReport {
    pub fn rank_deficient(&self) -> bool {
        self.final_rank < self.dim
    }
}

fn norm_checked(r: &DVector<f64>, iteration: usize) -> Result<f64> {
    let n = r.norm();
    if n.is_finite() {
        Ok(n)
    } else {
        Err(Error::NonFiniteResidual(iteration))
    }
}

/// Newton iteration on a space with a retraction.
///
/// Once the residual is within `cfg.tol`, one more Newton step is tried and
/// kept only if it lowers the residual.
///
/// Each iteration linearizes `ξ ↦ residual(retract(p, ξ))` at `ξ = 0` by
/// central differences, so the chart is re-centered at the current iterate.
/// Full-rank systems take the Newton step; rank-deficient ones take a damped
/// least-squares step. Steps are clamped to `cfg.chart_clamp` and shortened by
/// `cfg.damping` while they fail to decrease the residual.
pub fn newton_on<P, R, M>(
    start: P,
    dim: usize,
    mut residual: R,
    mut retract: M,
    cfg: &SolverConfig,
) -> Result<(P, NewtonReport)>
where
    P: Clone,
    R: FnMut(&P) -> DVector<f64>,
    M: FnMut(&P, &DVector<f64>) -> P,
{
    cfg.validate()?;
    let mut p = start;
    let mut r = residual(&p);
    let mut norm = norm_checked(&r, 0)?;
    let mut history = alloc::vec![norm];
    let mut iterations = 0;
    let zero = DVector::zeros(dim);

    // one extra step after reaching tol, kept only if it helps
    let mut polished = false;
    while (norm > cfg.tol || (!polished && norm > 0.0)) && iterations < cfg.max_iter {
        if norm <= cfg.tol {
            polished = true;
        }
        iterations += 1;
        let jac = fd_jacobian(|xi| residual(&retract(&p, xi)), &zero, cfg.fd_step);
        let svd = jac.clone().svd(true, true);
        let smax = svd.singular_values.max();
        let rank = svd
            .singular_values
            .iter()
            .filter(|s| **s > RANK_REL_THRESHOLD * smax)
            .count();
        let mut step = if rank == dim && smax > 0.0 {
            svd.solve(&(-&r), 0.0).map_err(Error::InvalidConfig)?
        } else {
            let mu = cfg.damping * norm;
            let jt = jac.transpose();
            let lhs = &jt * &jac + DMatrix::identity(dim, dim) * mu;
            let rhs = -(&jt * &r);
            match lhs.lu().solve(&rhs) {
                Some(s) => s,
                None => rhs * cfg.damping,
            }
        };
        let step_norm = step.norm();
        if step_norm > cfg.chart_clamp {
            step *= cfg.chart_clamp / step_norm;
        }

        let mut candidate = retract(&p, &step);
        let mut r_new = residual(&candidate);
        let mut n_new = norm_checked(&r_new, iterations)?;
        if polished {
            if n_new < norm {
                p = candidate;
                norm = n_new;
                history.push(norm);
            }
            break;
        }
        let mut tries = 0;
        while n_new >= norm && tries < MAX_BACKTRACKS {
            step *= cfg.damping;
            candidate = retract(&p, &step);
            r_new = residual(&candidate);
            n_new = norm_checked(&r_new, iterations)?;
            tries += 1;
        }
        p = candidate;
        r = r_new;
        norm = n_new;
        history.push(norm);
    }

    let jac = fd_jacobian(|xi| residual(&retract(&p, xi)), &zero, cfg.fd_step);
    let report = NewtonReport {
        iterations,
        residual_norm: norm,
        converged: norm <= cfg.tol,
        final_rank: numerical_rank(&jac),
        dim,
        history,
    };
    Ok((p, report))
}

/// Damped Newton in flat coordinates. There is no chart here, so
/// `cfg.chart_clamp` is ignored.
pub fn newton_solve<R>(residual: R, x0: &DVector<f64>, cfg: &SolverConfig) -> Result<(DVector<f64>, NewtonReport)>
where
    R: FnMut(&DVector<f64>) -> DVector<f64>,
{
    let flat = SolverConfig {
        chart_clamp: f64::INFINITY,
        ..*cfg
    };
    newton_on(x0.clone(), x0.len(), residual, |x, step| x + step, &flat)
}
