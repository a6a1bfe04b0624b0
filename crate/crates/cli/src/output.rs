//! Serialization of command results: fixed-width scientific notation in CSV
//! and shortest round-trip numbers in JSON.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::CliError;

/// Formats like C's `%.12e`: twelve fractional digits and a signed exponent
/// of at least two digits.
pub fn sci(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:.12e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

/// One row of a trajectory: the point reached at `step` (step 0 is the
/// initial point) with the step's residual and both momenta at the point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryRecord {
    pub step: usize,
    pub coeffs: [f64; 8],
    pub residual_norm: f64,
    pub converged: bool,
    pub degenerate: bool,
    pub p_plus: [f64; 7],
    pub p_minus: [f64; 7],
}

pub fn trajectory_header() -> String {
    let mut cols: Vec<String> = vec!["step".into()];
    cols.extend((0..8).map(|i| format!("c{i}")));
    cols.extend(["residual_norm".into(), "converged".into(), "degenerate".into()]);
    cols.extend((1..8).map(|i| format!("p_plus_{i}")));
    cols.extend((1..8).map(|i| format!("p_minus_{i}")));
    cols.join(",")
}

pub fn trajectory_csv(records: &[TrajectoryRecord]) -> String {
    let mut out = trajectory_header();
    out.push('\n');
    for r in records {
        let mut cols = vec![r.step.to_string()];
        cols.extend(r.coeffs.iter().map(|c| sci(*c)));
        cols.push(sci(r.residual_norm));
        cols.push(r.converged.to_string());
        cols.push(r.degenerate.to_string());
        cols.extend(r.p_plus.iter().map(|c| sci(*c)));
        cols.extend(r.p_minus.iter().map(|c| sci(*c)));
        out.push_str(&cols.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

/// Writes to `path`, or to standard output when there is none.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_style_exponents() {
        assert_eq!(sci(0.0), "0.000000000000e+00");
        assert_eq!(sci(1.0), "1.000000000000e+00");
        assert_eq!(sci(-0.5), "-5.000000000000e-01");
        assert_eq!(sci(1.234e-120), "1.234000000000e-120");
        assert_eq!(sci(6.02214076e23), "6.022140760000e+23");
        assert_eq!(sci(f64::NAN), "nan");
    }

    #[test]
    fn header_is_fixed() {
        assert_eq!(
            trajectory_header(),
            "step,c0,c1,c2,c3,c4,c5,c6,c7,residual_norm,converged,degenerate,\
             p_plus_1,p_plus_2,p_plus_3,p_plus_4,p_plus_5,p_plus_6,p_plus_7,\
             p_minus_1,p_minus_2,p_minus_3,p_minus_4,p_minus_5,p_minus_6,p_minus_7"
        );
    }
}
