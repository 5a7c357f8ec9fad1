//! Scalar abstraction for the numeric core.
//!
//! All model data, LP construction and solving code is generic over
//! [`Scalar`]. `f64` is the supported production configuration (the
//! crate-root aliases use it); `f32` works for experimentation with
//! correspondingly looser tolerances.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, NumAssign, NumCast};

/// Floating-point scalar usable by the model builders and the solver.
pub trait Scalar:
    Float + FloatConst + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Converts from `f64`, panicking only for values outside the type's
    /// representable range (never the case for the constants used here).
    fn from_f64(v: f64) -> Self {
        NumCast::from(v).expect("f64 constant not representable")
    }

    /// Lossy widening/narrowing to `f64` for reporting and formatting.
    fn as_f64(self) -> f64 {
        NumCast::from(self).expect("scalar not representable as f64")
    }

    /// Absolute feasibility tolerance for LP rows and variable bounds.
    fn feas_tol() -> Self;

    /// Relative tolerance for objective comparisons.
    fn obj_rel_tol() -> Self;
}

impl Scalar for f64 {
    fn feas_tol() -> Self {
        1e-7
    }

    fn obj_rel_tol() -> Self {
        1e-6
    }
}

impl Scalar for f32 {
    fn feas_tol() -> Self {
        1e-4
    }

    fn obj_rel_tol() -> Self {
        1e-3
    }
}

/// `|a - b| <= rel * max(|a|, |b|)`, the objective comparison used across
/// the crate.
pub fn rel_close<S: Scalar>(a: S, b: S, rel: S) -> bool {
    let scale = a.abs().max(b.abs());
    (a - b).abs() <= rel * scale.max(S::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_tolerances_are_pinned() {
        assert_eq!(<f64 as Scalar>::feas_tol(), 1e-7);
        assert_eq!(<f64 as Scalar>::obj_rel_tol(), 1e-6);
    }

    #[test]
    fn rel_close_scales_with_magnitude() {
        assert!(rel_close(1_000_000.0_f64, 1_000_000.5, 1e-6));
        assert!(!rel_close(1.0_f64, 1.1, 1e-6));
        assert!(rel_close(0.0_f64, 1e-9, 1e-6));
    }
}
