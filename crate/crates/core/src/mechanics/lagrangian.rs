use alloc::string::String;

use crate::algebra::Octonion;
use crate::error::{Error, Result};

/// The built-in Lagrangians on the unit octonions.
#[derive(Debug, Clone, PartialEq)]
pub enum LagrangianKind {
    /// `L(a) = ⟨e1, a⟩`
    Linear,
    /// `L(a) = ⟨e1, a⟩² / 2`
    SquaredLinear,
    /// `L(a) = Σ_k m_k ⟨e_k, a⟩² / 2` over the imaginary units.
    Kinetic { masses: [f64; 7] },
}

/// A Lagrangian together with the gradient of its natural extension to ℝ⁸.
///
/// Only pairings of the gradient with tangent directions carry meaning.
#[derive(Debug, Clone, PartialEq)]
pub struct Lagrangian {
    kind: LagrangianKind,
    label: String,
}

impl Lagrangian {
    pub fn linear() -> Self {
        Self {
            kind: LagrangianKind::Linear,
            label: "linear".into(),
        }
    }

    pub fn squared_linear() -> Self {
        Self {
            kind: LagrangianKind::SquaredLinear,
            label: "sq".into(),
        }
    }

    pub fn kinetic(masses: [f64; 7]) -> Result<Self> {
        for (i, &m) in masses.iter().enumerate() {
            if m.is_nan() || m <= 0.0 || m.is_infinite() {
                return Err(Error::NonPositiveMass { index: i + 1, value: m });
            }
        }
        Ok(Self {
            kind: LagrangianKind::Kinetic { masses },
            label: "kinetic".into(),
        })
    }

    /// Kinetic Lagrangian with every mass equal to `m`.
    pub fn kinetic_uniform(m: f64) -> Result<Self> {
        Self::kinetic([m; 7])
    }

    pub fn kind(&self) -> &LagrangianKind {
        &self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn masses(&self) -> Option<&[f64; 7]> {
        match &self.kind {
            LagrangianKind::Kinetic { masses } => Some(masses),
            _ => None,
        }
    }

    pub fn eval(&self, a: &Octonion) -> f64 {
        let c = a.coeffs();
        match &self.kind {
            LagrangianKind::Linear => c[1],
            LagrangianKind::SquaredLinear => 0.5 * c[1] * c[1],
            LagrangianKind::Kinetic { masses } => masses.iter().zip(&c[1..]).map(|(m, x)| 0.5 * m * x * x).sum(),
        }
    }

    pub fn ambient_grad(&self, a: &Octonion) -> Octonion {
        let c = a.coeffs();
        match &self.kind {
            LagrangianKind::Linear => Octonion::basis(1),
            LagrangianKind::SquaredLinear => Octonion::basis(1) * c[1],
            LagrangianKind::Kinetic { masses } => {
                let mut g = [0.0; 8];
                for k in 1..8 {
                    g[k] = masses[k - 1] * c[k];
                }
                Octonion::new(g)
            }
        }
    }
}
