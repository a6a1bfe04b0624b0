use alloc::vec::Vec;

use super::system::DiscreteSystem;
use crate::error::{Error, Result};
use crate::numerics::{nelder_mead, RngSpec};
use crate::smooth_loop::{UnitLoop, UnitOctonion};

/// Simplex restarts, each with a tenfold smaller initial simplex.
const RESTARTS: usize = 8;

/// Settings for the grid-search oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleConfig {
    /// Chart centers to search around; empty means the identity and `a`.
    pub centers: Vec<UnitOctonion>,
    pub radius: f64,
    /// Grid points per side of each planar slice.
    pub grid_n: usize,
    /// Random two-dimensional slices through each center.
    pub slices: usize,
    pub seed: u64,
    /// Accepted residual norm.
    pub tol: f64,
    /// Points closer than this are the same solution.
    pub dedup: f64,
    /// Refinement seeds kept per slice.
    pub seeds_per_slice: usize,
    /// Function evaluations per simplex run.
    pub max_evals: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            centers: Vec::new(),
            radius: 0.5,
            grid_n: 21,
            slices: 50,
            seed: 0,
            tol: 1e-8,
            dedup: 1e-4,
            seeds_per_slice: 3,
            max_evals: 4000,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_n < 8 {
            return Err(Error::InvalidConfig("grid_n must be at least 8"));
        }
        if !(self.radius > 0.0 && self.radius < core::f64::consts::PI) {
            return Err(Error::InvalidConfig("radius must lie in (0, π)"));
        }
        if self.slices == 0 {
            return Err(Error::InvalidConfig("slices must be at least 1"));
        }
        if self.tol.is_nan() || self.tol <= 0.0 || self.dedup.is_nan() || self.dedup <= 0.0 {
            return Err(Error::InvalidConfig("tol and dedup must be positive"));
        }
        Ok(())
    }
}

fn orthonormal_pair(dim: usize, sampler: &mut crate::numerics::Sampler) -> (Vec<f64>, Vec<f64>) {
    let draw = |s: &mut crate::numerics::Sampler| -> Vec<f64> { (0..dim).map(|_| s.gaussian()).collect() };
    let norm = |v: &[f64]| libm::sqrt(v.iter().map(|x| x * x).sum());
    loop {
        let mut u = draw(sampler);
        let mut v = draw(sampler);
        let nu = norm(&u);
        if nu < 1e-8 {
            continue;
        }
        u.iter_mut().for_each(|x| *x /= nu);
        let d: f64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
        v.iter_mut().zip(&u).for_each(|(x, y)| *x -= d * y);
        let nv = norm(&v);
        if nv < 1e-8 {
            continue;
        }
        v.iter_mut().for_each(|x| *x /= nv);
        return (u, v);
    }
}

impl<G: UnitLoop> DiscreteSystem<G> {
    /// All solutions `b` of the Euler-Lagrange equation from `a` found by an
    /// exhaustive search of the chart balls around the configured centers.
    ///
    /// Each center is probed on random planar grids through it. Grid points
    /// already below tolerance and discrete local minima of the residual norm
    /// are polished by Nelder-Mead on `‖r‖²` in the full chart. The solver in
    /// [`solve_step`](Self::solve_step) is not used, so the two can be checked
    /// against each other.
    pub fn brute_oracle(&self, a: &UnitOctonion, cfg: &OracleConfig) -> Result<Vec<UnitOctonion>> {
        cfg.validate()?;
        let dim = self.dim();
        let centers = if cfg.centers.is_empty() {
            alloc::vec![UnitOctonion::ONE, *a]
        } else {
            cfg.centers.clone()
        };
        let mut sampler = RngSpec::new(cfg.seed).sampler();
        let n = cfg.grid_n;
        let cell = 2.0 * cfg.radius / (n - 1) as f64;
        let mut found: Vec<UnitOctonion> = Vec::new();

        let accept = |b: UnitOctonion, found: &mut Vec<UnitOctonion>| {
            if self.el_residual(a, &b).norm() <= cfg.tol && found.iter().all(|f| f.distance(&b) > cfg.dedup) {
                found.push(b);
            }
        };

        for c in &centers {
            let objective = |xi: &[f64]| {
                let b = self.space().chart_point(c, xi);
                let r = self.el_residual(a, &b).norm();
                r * r
            };
            for _ in 0..cfg.slices {
                let (u, v) = orthonormal_pair(dim, &mut sampler);
                let point = |i: usize, j: usize| -> Vec<f64> {
                    let s = -cfg.radius + i as f64 * cell;
                    let t = -cfg.radius + j as f64 * cell;
                    (0..dim).map(|k| s * u[k] + t * v[k]).collect()
                };
                let inside = |i: usize, j: usize| {
                    let s = -cfg.radius + i as f64 * cell;
                    let t = -cfg.radius + j as f64 * cell;
                    s * s + t * t <= cfg.radius * cfg.radius * (1.0 + 1e-12)
                };
                let mut values = alloc::vec![f64::INFINITY; n * n];
                for i in 0..n {
                    for j in 0..n {
                        if inside(i, j) {
                            values[i * n + j] = libm::sqrt(objective(&point(i, j)));
                        }
                    }
                }

                let mut seeds: Vec<(f64, usize, usize)> = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        let f = values[i * n + j];
                        if !f.is_finite() {
                            continue;
                        }
                        if f <= cfg.tol {
                            accept(self.space().chart_point(c, &point(i, j)), &mut found);
                            continue;
                        }
                        let mut is_min = true;
                        for di in -1i64..=1 {
                            for dj in -1i64..=1 {
                                let (ni, nj) = (i as i64 + di, j as i64 + dj);
                                if (di, dj) == (0, 0) || ni < 0 || nj < 0 || ni >= n as i64 || nj >= n as i64 {
                                    continue;
                                }
                                if values[ni as usize * n + nj as usize] < f {
                                    is_min = false;
                                }
                            }
                        }
                        if is_min {
                            seeds.push((f, i, j));
                        }
                    }
                }
                seeds.sort_by(|x, y| x.0.total_cmp(&y.0));
                seeds.truncate(cfg.seeds_per_slice);

                for (_, i, j) in seeds {
                    let mut x = point(i, j);
                    let mut step = cell;
                    let mut fx = f64::INFINITY;
                    for _ in 0..RESTARTS {
                        let (xn, fnew) = nelder_mead(objective, &x, step, cfg.max_evals, cfg.tol * cfg.tol * 0.25);
                        x = xn;
                        fx = fnew;
                        if fx <= cfg.tol * cfg.tol * 0.25 {
                            break;
                        }
                        step *= 0.1;
                    }
                    let r: f64 = libm::sqrt(x.iter().map(|v| v * v).sum());
                    if fx <= cfg.tol * cfg.tol && r <= cfg.radius + cell {
                        accept(self.space().chart_point(c, &x), &mut found);
                    }
                }
            }
        }
        Ok(found)
    }
}
