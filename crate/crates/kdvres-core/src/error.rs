// SPDX-License-Identifier: MIT OR Apache-2.0
//! Error type shared by all core numerical routines.

/// Errors produced by the core numerical routines.
///
/// Every variant is a *domain-level* condition (an input outside a formula's
/// domain, an exact pole, a quadrature that failed to certify its accuracy,
/// …), never a panic: callers decide whether a condition is fatal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoreError {
    /// Input outside the mathematical domain of the operation
    /// (non-finite argument, non-positive parameter, point on a cut, …).
    Domain {
        /// Human-readable description of the violated precondition.
        what: &'static str,
    },
    /// Evaluation at (or within the guard radius of) an exact pole of a
    /// coefficient; carries the pole location.
    Pole {
        /// Real part of the offending pole.
        re: f64,
        /// Imaginary part of the offending pole.
        im: f64,
    },
    /// Evaluation at a point where the requested object is genuinely
    /// singular (cut endpoints, the origin of the local chart, …).
    SingularPoint {
        /// Which singular point was hit.
        at: &'static str,
    },
    /// Quadrature failed to reach the requested tolerance within its level
    /// or subdivision budget.
    Accuracy {
        /// Error estimate actually achieved.
        achieved: f64,
        /// Tolerance that was requested.
        requested: f64,
    },
    /// Adaptive ODE integration exhausted its step budget.
    Integration {
        /// Number of accepted steps taken before giving up.
        steps: usize,
    },
    /// The 2×2 matching system at `x = 0` is numerically degenerate.
    DegenerateMatching,
    /// Asymptotic formulas evaluated outside their regime (`ν(t) < 0`).
    Regime {
        /// The offending time.
        t: f64,
    },
    /// Invalid configuration value.
    Config {
        /// Human-readable description of the invalid field.
        what: &'static str,
    },
}

impl core::fmt::Display for CoreError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CoreError::Domain { what } => write!(f, "domain error: {what}"),
            CoreError::Pole { re, im } => {
                write!(f, "evaluation at a pole: k = {re} + {im}i")
            }
            CoreError::SingularPoint { at } => write!(f, "singular point: {at}"),
            CoreError::Accuracy {
                achieved,
                requested,
            } => write!(
                f,
                "quadrature accuracy {achieved:.3e} did not reach requested {requested:.3e}"
            ),
            CoreError::Integration { steps } => {
                write!(f, "ODE integration exceeded its budget after {steps} steps")
            }
            CoreError::DegenerateMatching => {
                write!(f, "degenerate scattering matching system at x = 0")
            }
            CoreError::Regime { t } => {
                write!(f, "t = {t} is below the asymptotic regime threshold")
            }
            CoreError::Config { what } => write!(f, "configuration error: {what}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CoreError {}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, CoreError>;

/// Returns `Domain` unless `x` is finite.
#[inline]
pub(crate) fn ensure_finite(x: f64, what: &'static str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(CoreError::Domain { what })
    }
}
