use core::fmt;

use crate::rindler_cavity::Frame2;

/// Errors produced by the physics routines.
///
/// Every variant carries the offending values so callers can report them
/// without re-deriving context.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A Minkowski event with `x <= |t|` lies outside the right Rindler wedge.
    OutsideWedge { t: f64, x: f64 },
    /// A quantity that must be strictly positive was not.
    NonPositive { what: &'static str, value: f64 },
    /// A quantity that must be finite was NaN or infinite.
    NonFinite { what: &'static str },
    /// Mirror positions do not satisfy `0 < A < B`.
    MirrorOrder { left: f64, right: f64 },
    /// Dirichlet cavities have no `n = 0` mode.
    ZeroMode,
    /// Boost velocity with `|v| >= 1`.
    Superluminal { v: f64 },
    /// Evaluation point outside the closed cavity `[A, B]`.
    OutsideCavity { chi: f64, left: f64, right: f64 },
    /// A stress tensor was supplied in the wrong coordinate frame.
    FrameMismatch { expected: Frame2, found: Frame2 },
    /// A 4D stress tensor was supplied in the curved frame where the flat
    /// conformal frame is required.
    CurvedInput,
    /// Jet mixed partial derivatives disagree.
    AsymmetricHessian { d01: f64, d10: f64 },
    /// Conformal time `η = 0` is not part of the de Sitter patch.
    ConformalTimeSingular,
    /// The boundary condition is not preserved by the conformal map.
    BoundaryNotConformal { condition: &'static str, normal_derivative: f64 },
    /// Richardson extrapolation failed to settle.
    NotConverged { estimate: f64 },
    /// Requested more extrapolation levels than supported.
    TooManyLevels { requested: usize, max: usize },
}

impl Error {
    /// Stable identifier of the variant, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::OutsideWedge { .. } => "outside_wedge",
            Error::NonPositive { .. } => "non_positive",
            Error::NonFinite { .. } => "non_finite",
            Error::MirrorOrder { .. } => "mirror_order",
            Error::ZeroMode => "zero_mode",
            Error::Superluminal { .. } => "superluminal",
            Error::OutsideCavity { .. } => "outside_cavity",
            Error::FrameMismatch { .. } => "frame_mismatch",
            Error::CurvedInput => "curved_input",
            Error::AsymmetricHessian { .. } => "asymmetric_hessian",
            Error::ConformalTimeSingular => "conformal_time_singular",
            Error::BoundaryNotConformal { .. } => "boundary_not_conformal",
            Error::NotConverged { .. } => "not_converged",
            Error::TooManyLevels { .. } => "too_many_levels",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::OutsideWedge { t, x } => {
                write!(f, "event (t={t}, x={x}) is outside the right Rindler wedge x > |t|")
            }
            Error::NonPositive { what, value } => write!(f, "{what} must be positive, got {value}"),
            Error::NonFinite { what } => write!(f, "{what} must be finite"),
            Error::MirrorOrder { left, right } => {
                write!(f, "mirror positions must satisfy 0 < A < B, got A={left}, B={right}")
            }
            Error::ZeroMode => write!(f, "mode number must be >= 1"),
            Error::Superluminal { v } => write!(f, "velocity must satisfy |v| < 1, got {v}"),
            Error::OutsideCavity { chi, left, right } => {
                write!(f, "chi={chi} lies outside the cavity [{left}, {right}]")
            }
            Error::FrameMismatch { expected, found } => {
                write!(f, "stress tensor in {found:?} frame, expected {expected:?}")
            }
            Error::CurvedInput => write!(f, "expected a stress tensor in the flat conformal frame"),
            Error::AsymmetricHessian { d01, d10 } => {
                write!(f, "mixed partials differ: d01={d01}, d10={d10}")
            }
            Error::ConformalTimeSingular => write!(f, "conformal time eta = 0 is outside the de Sitter patch"),
            Error::BoundaryNotConformal { condition, normal_derivative } => write!(
                f,
                "{condition} boundary condition is not conformally invariant here (normal derivative of sigma = {normal_derivative})"
            ),
            Error::NotConverged { estimate } => {
                write!(f, "extrapolation did not converge (error estimate {estimate})")
            }
            Error::TooManyLevels { requested, max } => {
                write!(f, "requested {requested} extrapolation levels, at most {max} supported")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn positive(what: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::NonFinite { what });
    }
    if value <= 0.0 {
        return Err(Error::NonPositive { what, value });
    }
    Ok(value)
}

pub(crate) fn finite(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { what })
    }
}
