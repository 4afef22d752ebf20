// SPDX-License-Identifier: MIT OR Apache-2.0
//! Exact scattering coefficients of the Schrödinger operator for the
//! potential family, in factored pole form.
//!
//! The factored forms
//!
//! ```text
//! T(k) = (k³ − k) / ((k + iκ)(k − k₋)(k − k₊))
//! R(k) = i(κ³ + κ) / ((k + iκ)(k − k₋)(k − k₊))
//! ```
//!
//! keep the zero locations (`k = −1, 0, 1`) and pole locations
//! (`k = −iκ, k₋, k₊`) exact, avoiding the catastrophic cancellation the
//! expanded cubic `k³ − k + 2ia` suffers near the resonance `k = 1`.

use crate::error::{CoreError, Result};
use crate::params::ResonanceParams;
use crate::{c64, C64};
#[allow(unused_imports)] // inherent methods cover std; the trait backs no_std
use num_traits::Float;

/// Radius around an exact pole inside which evaluation reports
/// [`CoreError::Pole`] instead of returning a floating-point blowup.
pub const POLE_GUARD: f64 = 1e-12;

/// Shared denominator `(k + iκ)(k − k₋)(k − k₊)`, with the pole guard.
fn denom(k: C64, p: &ResonanceParams) -> Result<C64> {
    let poles = [-p.i_kappa(), p.pole_minus(), p.pole_plus()];
    for pole in poles {
        if (k - pole).norm() < POLE_GUARD {
            return Err(CoreError::Pole {
                re: pole.re,
                im: pole.im,
            });
        }
    }
    Ok((k - poles[0]) * (k - poles[1]) * (k - poles[2]))
}

/// Transmission coefficient `T(k)`; analytic in the upper half-plane with
/// simple zeros exactly at `k ∈ {−1, 0, 1}`.
pub fn transmission(k: C64, p: &ResonanceParams) -> Result<C64> {
    let num = k * (k - 1.0) * (k + 1.0);
    Ok(num / denom(k, p)?)
}

/// Reflection coefficient `R(k)`; shares the pole set of `T` and satisfies
/// `|T|² + |R|² = 1` on the real line.
pub fn reflection(k: C64, p: &ResonanceParams) -> Result<C64> {
    let num = c64(0.0, p.kappa().powi(3) + p.kappa());
    Ok(num / denom(k, p)?)
}

/// `T′(1) = 2 / ((1 + iκ)(1 − k₋)(1 − k₊))`, the derivative of the
/// transmission coefficient at the resonance; its modulus is `1/a`.
pub fn transmission_derivative_at_one(p: &ResonanceParams) -> C64 {
    let one = c64(1.0, 0.0);
    c64(2.0, 0.0) / ((one + p.i_kappa()) * (one - p.pole_minus()) * (one - p.pole_plus()))
}

/// Transmission coefficient `T⁰(k) = (k³ − k)/(k³ − k + 2ia)` of the
/// pre-Darboux potential `q₀`.
pub fn transmission_free(k: C64, a: f64) -> C64 {
    let p = k * k * k - k;
    p / (p + c64(0.0, 2.0 * a))
}

/// Reflection coefficient `R⁰(k) = −2ia/(k³ − k + 2ia)` of `q₀`.
pub fn reflection_free(k: C64, a: f64) -> C64 {
    let p = k * k * k - k;
    c64(0.0, -2.0 * a) / (p + c64(0.0, 2.0 * a))
}

/// `log |T(s)|²` for real `s`, in the cancellation-free form
/// `log (s³−s)² − log ((s³−s)² + 4a²)`.
///
/// Diverges (to −∞) only at the zeros `s ∈ {−1, 0, 1}`.
pub fn log_abs_t_sq(s: f64, p: &ResonanceParams) -> f64 {
    let q = s * s * s - s;
    let a = p.a();
    (q * q).ln() - (q * q + 4.0 * a * a).ln()
}

/// Derivative `d/ds log |T(s)|² = 8a²(3s²−1) / ((s³−s)((s³−s)² + 4a²))`,
/// used as the analytic Taylor guard in principal-value quadrature.
pub fn log_abs_t_sq_deriv(s: f64, p: &ResonanceParams) -> f64 {
    let q = s * s * s - s;
    let a2 = p.a() * p.a();
    8.0 * a2 * (3.0 * s * s - 1.0) / (q * (q * q + 4.0 * a2))
}

/// `log |τ(s)|²` for `s ∈ (0, 1]`, where `τ(s) = T(s)/((1 − s)·T′(1))` is
/// the regularized transmission factor appearing in the regular part of the
/// `T₀` factorization.  Using `|T′(1)| = 1/a`,
///
/// ```text
/// log |τ(s)|² = 2(log a + log s + log(1 + s)) − log((s³−s)² + 4a²),
/// ```
///
/// which is `0` at `s = 1` and has a log singularity only at `s = 0`.  For
/// `s > 1/2` the zero is hit without cancellation (exactly at `s = 1`)
/// through the rearrangement
/// `−log1p[(1−s)·{s²(1−s)(1+s)² + a²(s+2)(s²+s+2)}/(a²s²(1+s)²)]`,
/// where `1 − s` is exact by the Sterbenz lemma.
pub fn log_abs_tau_sq(s: f64, p: &ResonanceParams) -> f64 {
    let a = p.a();
    if s > 0.5 {
        let dr = 1.0 - s;
        let one_plus = 1.0 + s;
        let num = s * s * dr * one_plus * one_plus + a * a * (s + 2.0) * (s * s + s + 2.0);
        -(dr * num / (a * a * s * s * one_plus * one_plus)).ln_1p()
    } else {
        let q = s * s * s - s;
        2.0 * (a.ln() + s.ln() + (1.0 + s).ln()) - (q * q + 4.0 * a * a).ln()
    }
}
