// SPDX-License-Identifier: MIT OR Apache-2.0
//! Long-time asymptotics of the field on the critical ray `x = −12t`:
//! a modulated sine wave whose amplitude decays like `√(log t / t)`.
//!
//! The slowly growing parameter is `ν(t) = (1/2π)·log(48a²t)`; the leading
//! term along the ray is
//!
//! ```text
//! q(−12t, t) ≈ √(4ν/3t) · sin(16t − ν(1 + πν − log ν) + δ),
//! ```
//!
//! with a `t`-independent phase shift `δ` assembled from the band data.
//! An independent route to the same asymptotics goes through the
//! parabolic-cylinder coefficient `β = √ν·ρ̄·e^{i(π/4 + arg Γ(iν))}`:
//! replacing `arg Γ(iν)` by its Stirling approximation
//! `ν log ν − ν − π/4` reproduces the sine form *exactly*, so the two
//! routes must agree within the amplitude times the Stirling gap — a
//! sharp, parameter-free consistency bound used by the tests.

use crate::error::{CoreError, Result};
use crate::params::ResonanceParams;
use crate::partial::j_regular;
use crate::quad::QuadratureSpec;
use crate::rhp::rho;
use crate::special::{dilog, ln_gamma};
use crate::{c64, C64, I};
#[allow(unused_imports)] // inherent methods cover std; the trait backs no_std
use num_traits::Float;

const PI: f64 = core::f64::consts::PI;

/// Tolerance band below `48a²t = 1` inside which the logarithm is clamped
/// to zero instead of failing, so that the nominal regime boundary
/// `t = 1/(48a²)` is accepted regardless of rounding.
const REGIME_SLACK: f64 = 1e-9;

/// `ν(t) = (1/2π)·log(48a²t)`, defined for `48a²t ≥ 1`
/// ([`CoreError::Regime`] below that).
pub fn nu_of_t(t: f64, p: &ResonanceParams) -> Result<f64> {
    if !t.is_finite() {
        return Err(CoreError::Domain {
            what: "t must be finite",
        });
    }
    let arg = 48.0 * p.a() * p.a() * t;
    if arg < 1.0 - REGIME_SLACK {
        return Err(CoreError::Regime { t });
    }
    Ok(arg.ln().max(0.0) / (2.0 * PI))
}

/// `ν′(t) = 1/(2πt)`.
#[inline]
fn nu_prime(t: f64) -> f64 {
    1.0 / (2.0 * PI * t)
}

/// The envelope `√(4ν/3t)` of the modulated wave.
pub fn amplitude(t: f64, p: &ResonanceParams) -> Result<f64> {
    Ok((4.0 * nu_of_t(t, p)? / (3.0 * t)).sqrt())
}

/// The `t`-independent phase shift
///
/// ```text
/// δ = (2/π)·J − (2/π)·Li₂(1/2) + (1/π)·log a·log(a/4) + 2 arctan κ − π/3,
/// ```
///
/// with `J` the regular band-edge integral
/// [`crate::partial::j_regular`].
pub fn phase_shift(p: &ResonanceParams, spec: &QuadratureSpec) -> Result<f64> {
    let j = j_regular(p, spec)?;
    let a = p.a();
    Ok(2.0 / PI * j - 2.0 / PI * dilog(c64(0.5, 0.0)).re + a.ln() * (a / 4.0).ln() / PI
        + 2.0 * p.kappa().atan()
        - PI / 3.0)
}

/// Total phase `16t − ν(1 + πν − log ν) + δ` of the sine (the `ν log ν`
/// term is continuous at the regime boundary, where it vanishes).
pub fn phase(t: f64, p: &ResonanceParams, delta: f64) -> Result<f64> {
    let nu = nu_of_t(t, p)?;
    let correction = if nu == 0.0 {
        0.0
    } else {
        nu * (1.0 + PI * nu - nu.ln())
    };
    Ok(16.0 * t - correction + delta)
}

/// `d/dt` of [`phase`]: `16 − ν′(t)·(2πν − log ν)`.  Needs the strict
/// interior of the regime (`ν > 0`) for the logarithm.
pub fn phase_derivative(t: f64, p: &ResonanceParams) -> Result<f64> {
    let nu = nu_of_t(t, p)?;
    if nu == 0.0 {
        return Err(CoreError::Regime { t });
    }
    Ok(16.0 - nu_prime(t) * (2.0 * PI * nu - nu.ln()))
}

/// Leading asymptotic field on the ray: `amplitude · sin(phase)`.
pub fn q_asym(t: f64, p: &ResonanceParams, delta: f64) -> Result<f64> {
    Ok(amplitude(t, p)? * phase(t, p, delta)?.sin())
}

/// The parabolic-cylinder coefficient
/// `β = √ν · ρ̄(t) · e^{i(π/4 + arg Γ(iν))}`, with the *true* `arg Γ`
/// taken from the continuous `log Γ` (a wrapped argument would break the
/// route comparison as soon as `arg Γ(iν)` leaves `(−π, π]`).
/// Satisfies `|β|² = ν` exactly.
pub fn beta(t: f64, p: &ResonanceParams, a0: C64) -> Result<C64> {
    let nu = nu_of_t(t, p)?;
    if nu == 0.0 {
        return Err(CoreError::Regime { t });
    }
    let arg_gamma = ln_gamma(c64(0.0, nu))?.im;
    Ok(nu.sqrt() * rho(t, p, a0)?.conj() * (I * (PI / 4.0 + arg_gamma)).exp())
}

/// The β-route field `q = 2(3t)^{−1/2}·Im β`, identical to [`q_asym`] up
/// to the Stirling gap of `arg Γ(iν)`.
pub fn q_alt(t: f64, p: &ResonanceParams, a0: C64) -> Result<f64> {
    Ok(2.0 / (3.0 * t).sqrt() * beta(t, p, a0)?.im)
}

/// `|arg Γ(iν) − (ν log ν − ν − π/4)|`: the deviation of the true phase
/// from its Stirling approximation, which bounds the difference of the
/// two asymptotic routes when multiplied by the amplitude.
pub fn stirling_gap(nu: f64) -> Result<f64> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(CoreError::Domain {
            what: "stirling_gap needs nu > 0",
        });
    }
    let true_arg = ln_gamma(c64(0.0, nu))?.im;
    Ok((true_arg - (nu * nu.ln() - nu - PI / 4.0)).abs())
}
