use loopmech_core::mechanics::{DiscreteSystem, LegendreSide};
use loopmech_core::numerics::numerical_rank;
use loopmech_core::smooth_loop::UnitOctonion;
use serde::Serialize;

use crate::config::{Format, LagrangianName, Resolved};
use crate::error::CliError;
use crate::output::{emit, sci, to_json};

/// Row-major copy of a Legendre Jacobian and its rank.
fn rows(sys: &DiscreteSystem, a: &UnitOctonion, side: LegendreSide) -> (Vec<Vec<f64>>, usize) {
    let j = sys.legendre_jacobian(a, side);
    let rank = numerical_rank(&j);
    (
        (0..j.nrows()).map(|r| j.row(r).iter().copied().collect()).collect(),
        rank,
    )
}

#[derive(Debug, Serialize)]
pub struct LegendrePoint {
    pub point: [f64; 8],
    pub f_plus: [f64; 7],
    pub f_minus: [f64; 7],
    pub rank_plus: usize,
    pub rank_minus: usize,
    pub jacobian_plus: Vec<Vec<f64>>,
    pub jacobian_minus: Vec<Vec<f64>>,
}

#[derive(Debug, Serialize)]
pub struct LegendreDocument {
    pub lagrangian: LagrangianName,
    pub masses: Option<[f64; 7]>,
    pub seed: u64,
    /// Largest `|𝔽⁺L - 𝔽⁻L|` component over all points.
    pub max_plus_minus_diff: f64,
    pub points: Vec<LegendrePoint>,
}

pub fn compute(cfg: &Resolved) -> Result<LegendreDocument, CliError> {
    if cfg.points.is_empty() {
        return Err(CliError::Config("legendre needs `points` or `random_points`".into()));
    }
    let sys = DiscreteSystem::octonionic(cfg.lagrangian.clone());
    let mut max_diff: f64 = 0.0;
    let points = cfg
        .points
        .iter()
        .map(|a| {
            let fp = sys.legendre_plus(a);
            let fm = sys.legendre_minus(a);
            max_diff = max_diff.max((*fp.covector() - *fm.covector()).max_abs());
            let (jacobian_plus, rank_plus) = rows(&sys, a, LegendreSide::Plus);
            let (jacobian_minus, rank_minus) = rows(&sys, a, LegendreSide::Minus);
            LegendrePoint {
                point: *a.value().coeffs(),
                f_plus: *fp.covector().coeffs(),
                f_minus: *fm.covector().coeffs(),
                rank_plus,
                rank_minus,
                jacobian_plus,
                jacobian_minus,
            }
        })
        .collect();
    Ok(LegendreDocument {
        lagrangian: cfg.name,
        masses: cfg.masses,
        seed: cfg.seed,
        max_plus_minus_diff: max_diff,
        points,
    })
}

pub fn csv(doc: &LegendreDocument) -> String {
    let mut cols: Vec<String> = vec!["index".into()];
    cols.extend((0..8).map(|i| format!("c{i}")));
    cols.extend((1..8).map(|i| format!("f_plus_{i}")));
    cols.extend((1..8).map(|i| format!("f_minus_{i}")));
    cols.extend(["rank_plus".into(), "rank_minus".into()]);
    let mut out = cols.join(",");
    out.push('\n');
    for (i, p) in doc.points.iter().enumerate() {
        let mut row = vec![i.to_string()];
        row.extend(p.point.iter().map(|c| sci(*c)));
        row.extend(p.f_plus.iter().map(|c| sci(*c)));
        row.extend(p.f_minus.iter().map(|c| sci(*c)));
        row.push(p.rank_plus.to_string());
        row.push(p.rank_minus.to_string());
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn render(doc: &LegendreDocument, format: Format) -> String {
    match format {
        Format::Csv => csv(doc),
        Format::Json => to_json(doc),
    }
}

pub fn run(cfg: &Resolved) -> Result<(), CliError> {
    let doc = compute(cfg)?;
    emit(cfg.output_path.as_deref(), &render(&doc, cfg.format))
}
