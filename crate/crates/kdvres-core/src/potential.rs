// SPDX-License-Identifier: MIT OR Apache-2.0
//! Closed-form evaluation of the pre-Darboux potential `q₀`, the initial
//! datum `q`, and their shared oscillatory tail model.
//!
//! Both potentials are second logarithmic derivatives,
//! `−2 (log g)″ = −2 (g″g − g′²)/g²`, expanded analytically to
//! rational-trigonometric closed forms — numerical differentiation of the
//! logarithm would destroy the `1e−8` Darboux-identity budget.  Both vanish
//! identically for `x ≥ 0`.

use crate::error::{ensure_finite, CoreError, Result};
use crate::params::ResonanceParams;
#[allow(unused_imports)] // inherent methods cover std; the trait backs no_std
use num_traits::Float;

/// `u(x) = 1 + a(sin 2x − 2x)` and its first two derivatives.
///
/// For `x < 0` one has `sin 2x − 2x > 0`, so `u > 1`: the form is
/// pole-free on the support.
#[inline]
pub(crate) fn u_parts(x: f64, a: f64) -> (f64, f64, f64) {
    let s2 = (2.0 * x).sin();
    let c2 = (2.0 * x).cos();
    let u = 1.0 + a * (s2 - 2.0 * x);
    let up = 2.0 * a * (c2 - 1.0);
    let upp = -4.0 * a * s2;
    (u, up, upp)
}

/// The pre-Darboux potential
/// `q₀(x) = −2 d²/dx² log{1 + a(sin 2x − 2x)}` for `x < 0`, and `0` for
/// `x ≥ 0`.  Continuous at the origin with `q₀(0) = 0`, and
/// `q₀(x) = −4 sin 2x/x + O(1/x²)` as `x → −∞`.
pub fn q0(x: f64, a: f64) -> Result<f64> {
    let x = ensure_finite(x, "x must be finite")?;
    if a <= 0.0 || !a.is_finite() {
        return Err(CoreError::Domain {
            what: "a must be positive and finite",
        });
    }
    if x >= 0.0 {
        return Ok(0.0);
    }
    let (u, up, upp) = u_parts(x, a);
    Ok(-2.0 * (upp * u - up * up) / (u * u))
}

/// `w(x) = 1 − (κ³+κ)x + (κ³−κ) sin x cos x + 2κ² sin²x` and its first two
/// derivatives (the tau-function of the Darboux-transformed potential).
#[inline]
pub(crate) fn w_parts(x: f64, kappa: f64) -> (f64, f64, f64) {
    let k3p = kappa * kappa * kappa + kappa;
    let k3m = kappa * kappa * kappa - kappa;
    let k2 = kappa * kappa;
    let s = x.sin();
    let c = x.cos();
    let s2 = (2.0 * x).sin();
    let c2 = (2.0 * x).cos();
    let w = 1.0 - k3p * x + k3m * s * c + 2.0 * k2 * s * s;
    let wp = -k3p + k3m * c2 + 2.0 * k2 * s2;
    let wpp = -2.0 * k3m * s2 + 4.0 * k2 * c2;
    (w, wp, wpp)
}

/// The initial datum
/// `q(x) = −2 d²/dx² log{1 − (κ³+κ)x + (κ³−κ) sin x cos x + 2κ² sin²x}`
/// for `x < 0`, and `0` for `x ≥ 0`.
///
/// Returns a domain error if the log argument is non-positive, which cannot
/// happen for valid κ and `x < 0` (tested) and would indicate a parameter
/// or coding fault.
pub fn q(x: f64, p: &ResonanceParams) -> Result<f64> {
    let x = ensure_finite(x, "x must be finite")?;
    if x >= 0.0 {
        return Ok(0.0);
    }
    let (w, wp, wpp) = w_parts(x, p.kappa());
    if w <= 0.0 {
        return Err(CoreError::Domain {
            what: "log argument of q is non-positive",
        });
    }
    Ok(-2.0 * (wpp * w - wp * wp) / (w * w))
}

/// Phase of the oscillatory tail of `q`: the angle `δ` with
/// `tan δ = 2κ/(1 − κ²)` for which `q(x) ∼ −4 sin(2x + δ)/x`.
///
/// Both `2 arctan κ` and `2 arctan κ − π` have the required tangent (the
/// double-angle identity); the measured tails of `q` for κ on both sides of
/// 1 select `δ = 2 arctan κ − π`, which is the branch implemented here.  It
/// is continuous in κ (no jump at κ = 1, where the tangent blows up).
pub fn tail_delta(p: &ResonanceParams) -> f64 {
    2.0 * p.kappa().atan() - core::f64::consts::PI
}

/// Leading tail model `−4 sin(2x + δ)/x` of `q` with the branch of
/// [`tail_delta`]; accurate to `O(1/x²)` as `x → −∞`.
pub fn tail_model(x: f64, p: &ResonanceParams) -> f64 {
    -4.0 * (2.0 * x + tail_delta(p)).sin() / x
}
