//! The JSON run configuration shared by `trajectory` and `legendre`.

use std::path::{Path, PathBuf};

use loopmech_core::mechanics::Lagrangian;
use loopmech_core::numerics::{RngSpec, Sampler, SolverConfig};
use loopmech_core::smooth_loop::{exp_map, AlgebraVector, UnitOctonion};
use loopmech_core::Octonion;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LagrangianName {
    Linear,
    Sq,
    Kinetic,
}

/// A point given as eight coefficients, a basis name `"e0"`..`"e7"`, or
/// `{"exp": [ξ1, ..., ξ7]}`. Coefficient vectors are normalized.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum PointSpec {
    Coeffs([f64; 8]),
    Named(String),
    Exp { exp: [f64; 7] },
}

impl PointSpec {
    pub fn resolve(&self) -> Result<UnitOctonion, CliError> {
        match self {
            PointSpec::Coeffs(c) => {
                UnitOctonion::normalize(Octonion::new(*c)).map_err(|e| CliError::Config(format!("point {c:?}: {e}")))
            }
            PointSpec::Named(name) => {
                let k = name
                    .strip_prefix('e')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|k| *k < 8)
                    .ok_or_else(|| CliError::Config(format!("unknown point name {name:?}, expected e0..e7")))?;
                Ok(UnitOctonion::basis(k))
            }
            PointSpec::Exp { exp } => {
                let v = AlgebraVector::new(*exp);
                if !v.is_finite() {
                    return Err(CliError::Config("exp coordinates must be finite".into()));
                }
                Ok(exp_map(&v))
            }
        }
    }
}

/// How the solver is seeded at each step.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GuessStrategy {
    /// Start from the current point.
    #[default]
    Same,
    /// Start from the conjugate of the current point.
    Conjugate,
    /// Start from the current point moved by a random chart vector of at
    /// most this length.
    Perturbed(f64),
}

impl GuessStrategy {
    pub fn guess(&self, a: &UnitOctonion, sampler: &mut Sampler) -> UnitOctonion {
        match self {
            GuessStrategy::Same => *a,
            GuessStrategy::Conjugate => a.conj(),
            GuessStrategy::Perturbed(r) => a.mul(&exp_map(&sampler.algebra(*r))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverSection {
    pub tol: f64,
    pub max_iter: usize,
    pub fd_step: f64,
    pub damping: f64,
    pub chart_clamp: f64,
}

impl Default for SolverSection {
    fn default() -> Self {
        let d = SolverConfig::default();
        Self {
            tol: d.tol,
            max_iter: d.max_iter,
            fd_step: d.fd_step,
            damping: d.damping,
            chart_clamp: d.chart_clamp,
        }
    }
}

impl SolverSection {
    pub fn to_config(&self) -> Result<SolverConfig, CliError> {
        let cfg = SolverConfig {
            tol: self.tol,
            max_iter: self.max_iter,
            fd_step: self.fd_step,
            damping: self.damping,
            chart_clamp: self.chart_clamp,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, PartialEq, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputSection {
    pub path: Option<PathBuf>,
    pub format: Option<Format>,
}

fn default_initial() -> PointSpec {
    PointSpec::Named("e0".into())
}

fn default_steps() -> i64 {
    10
}

/// A run configuration as written in the JSON document.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub lagrangian: LagrangianName,
    #[serde(default)]
    pub masses: Option<[f64; 7]>,
    #[serde(default = "default_initial")]
    pub initial: PointSpec,
    #[serde(default)]
    pub guess_strategy: GuessStrategy,
    #[serde(default = "default_steps")]
    pub steps: i64,
    #[serde(default)]
    pub solver: SolverSection,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub output: OutputSection,
    /// Points evaluated by `legendre`.
    #[serde(default)]
    pub points: Vec<PointSpec>,
    /// Extra uniformly random points evaluated by `legendre`.
    #[serde(default)]
    pub random_points: usize,
}

/// A validated configuration with every value resolved.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub lagrangian: Lagrangian,
    pub name: LagrangianName,
    pub masses: Option<[f64; 7]>,
    pub initial: UnitOctonion,
    pub guess_strategy: GuessStrategy,
    pub steps: usize,
    pub solver: SolverConfig,
    pub seed: u64,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub points: Vec<UnitOctonion>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Config(m) => CliError::Config(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let lagrangian = match (self.lagrangian, self.masses) {
            (LagrangianName::Kinetic, m) => Lagrangian::kinetic(m.unwrap_or([1.0; 7]))?,
            (_, Some(_)) => return Err(CliError::Config("masses apply only to the kinetic Lagrangian".into())),
            (LagrangianName::Linear, None) => Lagrangian::linear(),
            (LagrangianName::Sq, None) => Lagrangian::squared_linear(),
        };
        if self.steps < 1 {
            return Err(CliError::Config(format!(
                "steps must be at least 1, got {}",
                self.steps
            )));
        }
        if let GuessStrategy::Perturbed(r) = self.guess_strategy {
            if !(r >= 0.0 && r.is_finite()) {
                return Err(CliError::Config(
                    "perturbation radius must be finite and nonnegative".into(),
                ));
            }
        }
        let mut points = self
            .points
            .iter()
            .map(PointSpec::resolve)
            .collect::<Result<Vec<_>, _>>()?;
        let mut sampler = RngSpec::new(self.seed).sampler();
        points.extend((0..self.random_points).map(|_| sampler.unit_octonion()));
        Ok(Resolved {
            masses: lagrangian.masses().copied(),
            lagrangian,
            name: self.lagrangian,
            initial: self.initial.resolve()?,
            guess_strategy: self.guess_strategy,
            steps: self.steps as usize,
            solver: self.solver.to_config()?,
            seed: self.seed,
            output_path: self.output.path.clone(),
            format: self.output.format.unwrap_or_default(),
            points,
        })
    }
}
