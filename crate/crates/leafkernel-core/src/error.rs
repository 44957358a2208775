//! Error type shared by the numeric kernels and the function layer.

use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the numeric layers.
///
/// The symbolic layer does not use this type: a failed identity is reported
/// through [`crate::symbolic::ProofReport`], not as a runtime error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    Domain { what: &'static str, value: f64 },
    /// Argument magnitude beyond the precision envelope for period reduction.
    ArgumentEnvelope { l: f64, limit: f64 },
    /// Quadrature did not reach the requested tolerance within the
    /// refinement budget; carries the best estimate and an error bound.
    QuadratureConvergence { estimate: f64, error_bound: f64 },
    /// Root-finding target lies outside the bracket values `[f(a), f(b)]`.
    Bracket { target: f64, f_lo: f64, f_hi: f64 },
    /// Root finder hit its iteration cap; carries the best abscissa found
    /// and the residual there.
    RootConvergence { best: f64, residual: f64 },
    /// Leaf order outside the supported set for this operation.
    UnsupportedOrder { n: u32 },
    /// Adaptive ODE step size underflowed or the step budget ran out. The
    /// leaf equations are smooth and bounded, so this signals a bug rather
    /// than stiffness.
    StepUnderflow { l: f64, step: f64 },
    /// No periodic return detected within the search window.
    PeriodDetection { searched: f64 },
    /// Invalid configuration value (tolerances, brackets, budgets).
    InvalidSpec { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => {
                write!(f, "domain error: {what} = {value} is outside the valid range")
            }
            Error::ArgumentEnvelope { l, limit } => write!(
                f,
                "argument {l} exceeds the |l| <= {limit} envelope within which period reduction keeps full precision"
            ),
            Error::QuadratureConvergence { estimate, error_bound } => write!(
                f,
                "quadrature did not converge: best estimate {estimate} with error bound {error_bound}"
            ),
            Error::Bracket { target, f_lo, f_hi } => write!(
                f,
                "target {target} is not bracketed by [f(a), f(b)] = [{f_lo}, {f_hi}]"
            ),
            Error::RootConvergence { best, residual } => write!(
                f,
                "root finder hit its iteration cap; best abscissa {best} with residual {residual}"
            ),
            Error::UnsupportedOrder { n } => write!(f, "leaf order n = {n} is not supported here"),
            Error::StepUnderflow { l, step } => {
                write!(f, "ODE step size underflow at l = {l} (h = {step})")
            }
            Error::PeriodDetection { searched } => {
                write!(f, "no periodic return found within l <= {searched}")
            }
            Error::InvalidSpec { what } => write!(f, "invalid configuration: {what}"),
        }
    }
}

impl core::error::Error for Error {}
