use std::path::Path;

use loopmech_core::mechanics::cotangent_obstruction;
use loopmech_core::numerics::{RngSpec, Sampler};
use loopmech_core::smooth_loop::UnitOctonion;
use loopmech_core::Octonion;
use serde::Serialize;

use crate::config::Format;
use crate::error::CliError;
use crate::output::{emit, to_json};
use crate::parallel::map_ordered;

/// Below this many trials the octonionic lower bound is not asserted.
pub const MIN_TRIALS_FOR_WITNESS: usize = 100;
/// Required largest obstruction on the octonions.
pub const WITNESS_THRESHOLD: f64 = 0.01;
/// Allowed largest obstruction on a quaternionic subalgebra.
pub const QUATERNIONIC_BOUND: f64 = 1e-10;

/// Decade edges of the histogram; the first bin is everything below the
/// first edge and the last everything from the last edge up.
const EDGES: [f64; 8] = [1e-14, 1e-12, 1e-10, 1e-8, 1e-6, 1e-4, 1e-2, 1.0];

#[derive(Debug, Clone, Copy)]
struct Trial {
    g: UnitOctonion,
    h: UnitOctonion,
    theta: Octonion,
}

#[derive(Debug, Serialize, PartialEq)]
pub struct Bin {
    pub lower: f64,
    /// `None` for the unbounded top bin.
    pub upper: Option<f64>,
    pub count: usize,
}

#[derive(Debug, Serialize, PartialEq)]
pub struct Witness {
    pub g: [f64; 8],
    pub h: [f64; 8],
    pub theta: [f64; 8],
    pub value: f64,
}

#[derive(Debug, Serialize, PartialEq)]
pub struct ObstructionReport {
    pub trials: usize,
    pub seed: u64,
    pub quaternionic: bool,
    pub max: f64,
    pub mean: f64,
    pub witness: Witness,
    pub histogram: Vec<Bin>,
    /// The asserted bound, as text.
    pub criterion: String,
    pub passed: bool,
}

fn draw(sampler: &mut Sampler, quaternionic: bool) -> Trial {
    let (g, h, raw) = if quaternionic {
        let g = sampler.unit_quaternion();
        let h = sampler.unit_quaternion();
        let c: [f64; 4] = std::array::from_fn(|_| sampler.gaussian());
        (g, h, Octonion::new([c[0], c[1], c[2], c[3], 0.0, 0.0, 0.0, 0.0]))
    } else {
        (
            sampler.unit_octonion(),
            sampler.unit_octonion(),
            sampler.gaussian_octonion(),
        )
    };
    let gh = *g.value() * *h.value();
    let gh = gh * (1.0 / gh.norm());
    let theta = raw - gh * raw.dot(&gh);
    Trial { g, h, theta }
}

fn histogram(values: &[f64]) -> Vec<Bin> {
    let mut bins: Vec<Bin> = Vec::with_capacity(EDGES.len() + 1);
    bins.push(Bin {
        lower: 0.0,
        upper: Some(EDGES[0]),
        count: 0,
    });
    for w in EDGES.windows(2) {
        bins.push(Bin {
            lower: w[0],
            upper: Some(w[1]),
            count: 0,
        });
    }
    bins.push(Bin {
        lower: EDGES[EDGES.len() - 1],
        upper: None,
        count: 0,
    });
    for v in values {
        let k = EDGES.iter().take_while(|e| *v >= **e).count();
        bins[k].count += 1;
    }
    bins
}

/// Samples `(g, h, θ)` with `θ ⟂ gh` and measures how far the two ways of
/// translating `θ` back to the identity disagree. Samples are drawn serially
/// from one stream and evaluated on `threads` workers, so the report does not
/// depend on the thread count.
pub fn compute(trials: usize, seed: u64, quaternionic: bool, threads: usize) -> Result<ObstructionReport, CliError> {
    if trials == 0 {
        return Err(CliError::Config("trials must be at least 1".into()));
    }
    let mut sampler = RngSpec::new(seed).sampler();
    let samples: Vec<Trial> = (0..trials).map(|_| draw(&mut sampler, quaternionic)).collect();
    let values = map_ordered(&samples, threads, |t| cotangent_obstruction(&t.g, &t.h, &t.theta));
    let values = values.into_iter().collect::<Result<Vec<f64>, _>>()?;

    let (best, max) =
        values.iter().copied().enumerate().fold(
            (0, f64::NEG_INFINITY),
            |acc, (i, v)| if v > acc.1 { (i, v) } else { acc },
        );
    let mean = values.iter().sum::<f64>() / trials as f64;
    let t = samples[best];
    let (criterion, passed) = if quaternionic {
        (format!("max <= {QUATERNIONIC_BOUND:e}"), max <= QUATERNIONIC_BOUND)
    } else if trials >= MIN_TRIALS_FOR_WITNESS {
        (format!("max > {WITNESS_THRESHOLD}"), max > WITNESS_THRESHOLD)
    } else {
        ("none (fewer than 100 trials)".into(), true)
    };
    Ok(ObstructionReport {
        trials,
        seed,
        quaternionic,
        max,
        mean,
        witness: Witness {
            g: *t.g.value().coeffs(),
            h: *t.h.value().coeffs(),
            theta: *t.theta.coeffs(),
            value: max,
        },
        histogram: histogram(&values),
        criterion,
        passed,
    })
}

pub fn summary(r: &ObstructionReport) -> String {
    let mut s = format!(
        "obstruction over {} {} trials (seed {}): max {:.6e}, mean {:.6e}\n",
        r.trials,
        if r.quaternionic { "quaternionic" } else { "octonionic" },
        r.seed,
        r.max,
        r.mean
    );
    for b in &r.histogram {
        let upper = b.upper.map_or("inf".to_string(), |u| format!("{u:e}"));
        s.push_str(&format!("  [{:e}, {upper}): {}\n", b.lower, b.count));
    }
    s.push_str(&format!("{} {}\n", if r.passed { "PASS" } else { "FAIL" }, r.criterion));
    s
}

pub fn run(
    trials: usize,
    seed: u64,
    quaternionic: bool,
    threads: usize,
    format: Format,
    report: Option<&Path>,
) -> Result<(), CliError> {
    let r = compute(trials, seed, quaternionic, threads)?;
    let text = match format {
        Format::Json => to_json(&r),
        Format::Csv => summary(&r),
    };
    emit(None, &text)?;
    if let Some(p) = report {
        emit(Some(p), &to_json(&r))?;
    }
    if r.passed {
        Ok(())
    } else {
        Err(CliError::CheckFailed(format!(
            "obstruction max {:e} violates {}",
            r.max, r.criterion
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_bins_by_decade() {
        let h = histogram(&[0.0, 5e-13, 1e-12, 0.5, 2.0]);
        assert_eq!(h.len(), 9);
        assert_eq!(h[0].count, 1);
        assert_eq!(h[1].count, 1);
        assert_eq!(h[2].count, 1);
        assert_eq!(h[7].count, 1);
        assert_eq!(h[8].count, 1);
    }

    #[test]
    fn thread_count_does_not_change_the_report() {
        let a = compute(200, 3, false, 1).unwrap();
        let b = compute(200, 3, false, 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_trials_is_a_config_error() {
        assert!(matches!(compute(0, 0, false, 1), Err(CliError::Config(_))));
    }
}
