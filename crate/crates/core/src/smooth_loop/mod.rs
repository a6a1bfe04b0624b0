//! Smooth inverse loops: the unit octonions, the invertible octonions, and
//! the unit quaternions as an associative control.

mod instances;
mod points;
mod tangent;

pub use instances::{InvertibleOctonions, LoopInstance, UnitLoop, UnitOctonions, UnitQuaternions, UNIT_EPS};
pub use points::{AlgebraVector, TangentVector, UnitOctonion, RENORMALIZE_WINDOW, TANGENCY_EPS};
pub use tangent::{
    bracket_field_at, bracket_field_value, bracket_left, bracket_right, exp_map, jacobiator, left_invariance_defect,
    left_prolong, leibniz_coefficient, log_map, loop_inverse_diff_check, malcev_residual, moufang_residuals,
    right_prolong, tangent_loop_mul, BracketSide, BRACKET_REAL_EPS, INVERSE_DIFF_STEP,
};
