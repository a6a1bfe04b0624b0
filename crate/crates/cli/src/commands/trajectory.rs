use loopmech_core::mechanics::DiscreteSystem;
use loopmech_core::numerics::RngSpec;
use loopmech_core::smooth_loop::UnitOctonion;
use serde::Serialize;

use crate::config::{Format, GuessStrategy, LagrangianName, Resolved};
use crate::error::CliError;
use crate::output::{emit, to_json, trajectory_csv, TrajectoryRecord};

#[derive(Debug, Serialize)]
pub struct TrajectoryDocument {
    pub lagrangian: LagrangianName,
    pub masses: Option<[f64; 7]>,
    pub guess_strategy: GuessStrategy,
    pub seed: u64,
    pub steps: usize,
    pub completed: bool,
    pub records: Vec<TrajectoryRecord>,
}

fn record(
    sys: &DiscreteSystem,
    step: usize,
    b: &UnitOctonion,
    residual_norm: f64,
    converged: bool,
    degenerate: bool,
) -> TrajectoryRecord {
    TrajectoryRecord {
        step,
        coeffs: *b.value().coeffs(),
        residual_norm,
        converged,
        degenerate,
        p_plus: *sys.legendre_plus(b).covector().coeffs(),
        p_minus: *sys.legendre_minus(b).covector().coeffs(),
    }
}

/// Iterates the discrete Euler-Lagrange step from the initial point. Record
/// 0 is the initial point itself. Stops at the first step that does not
/// converge; everything computed up to then is still written.
pub fn compute(cfg: &Resolved) -> (TrajectoryDocument, Option<CliError>) {
    let sys = DiscreteSystem::octonionic(cfg.lagrangian.clone());
    let mut sampler = RngSpec::new(cfg.seed).sampler();
    let mut records = vec![record(&sys, 0, &cfg.initial, 0.0, true, false)];
    let mut a = cfg.initial;
    let mut failure = None;
    for step in 1..=cfg.steps {
        let guess = cfg.guess_strategy.guess(&a, &mut sampler);
        match sys.solve_step(&a, &guess, &cfg.solver) {
            Ok(rep) => {
                records.push(record(
                    &sys,
                    step,
                    &rep.to,
                    rep.residual_norm,
                    rep.converged,
                    rep.degenerate_branch,
                ));
                if !rep.converged {
                    failure = Some(CliError::Solver(format!(
                        "step {step} did not converge: residual {:e} after {} iterations",
                        rep.residual_norm, rep.iterations
                    )));
                    break;
                }
                a = rep.to;
            }
            Err(e) => {
                failure = Some(CliError::Solver(format!("step {step}: {e}")));
                break;
            }
        }
    }
    let doc = TrajectoryDocument {
        lagrangian: cfg.name,
        masses: cfg.masses,
        guess_strategy: cfg.guess_strategy,
        seed: cfg.seed,
        steps: cfg.steps,
        completed: failure.is_none(),
        records,
    };
    (doc, failure)
}

pub fn render(doc: &TrajectoryDocument, format: Format) -> String {
    match format {
        Format::Csv => trajectory_csv(&doc.records),
        Format::Json => to_json(doc),
    }
}

pub fn run(cfg: &Resolved) -> Result<(), CliError> {
    let (doc, failure) = compute(cfg);
    emit(cfg.output_path.as_deref(), &render(&doc, cfg.format))?;
    match failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}
