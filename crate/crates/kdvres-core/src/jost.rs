// SPDX-License-Identifier: MIT OR Apache-2.0
//! Closed-form Jost solution for the pre-Darboux potential and the exact
//! Darboux transform that produces the initial datum from it.
//!
//! For `x ≤ 0` the Schrödinger equation `−ψ″ + q₀ψ = k²ψ` with
//! [`crate::potential::q0`] admits the explicit solution
//!
//! ```text
//! ψ(x, k) = e^{−ikx} h(x, k),      h = 1 + B(x, k) s(x),
//! B = e^{ix}/(k−1) − e^{−ix}/(k+1),    s = 2a sin x / u(x),
//! ```
//!
//! with `u = 1 + a(sin 2x − 2x)`.  It is normalized by `ψ ~ e^{−ikx}` as
//! `x → −∞` and satisfies `ψ(0) = 1`, `ψ′(0) = −ik + 4a/(k²−1)`.  All
//! derivatives used here are analytic (note `B″ = −B`), so the identity
//! `h″ − 2ik h′ = q₀ h` holds to machine precision — this module never
//! differentiates numerically.
//!
//! Evaluating at `k = iκ` (where `B` becomes real) and taking one Darboux
//! step on the resulting positive solution yields the initial datum:
//! `q = q₀ − 2 (log h)″` with the real-arithmetic path in [`darboux_q`].

use crate::error::{ensure_finite, CoreError, Result};
use crate::params::ResonanceParams;
use crate::potential::{q0, u_parts};
use crate::{c64, C64, I};
#[allow(unused_imports)] // inherent methods cover std; the trait backs no_std
use num_traits::Float;

/// Radius around the spectral edge points `k = ±1` inside which the closed
/// form is rejected: `B` has simple poles there and the subtractive cancels
/// in `h` lose all significance well before the poles are reached.
pub const EDGE_GUARD: f64 = 1e-9;

/// One evaluation of the Jost solution: the point, the spectral parameter,
/// and the pair `(ψ, ψ′)` that seeds or verifies an ODE integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JostValue {
    /// Evaluation point (`x ≤ 0`).
    pub x: f64,
    /// Spectral parameter.
    pub k: C64,
    /// `ψ(x, k)`.
    pub psi: C64,
    /// `∂ψ/∂x (x, k)`.
    pub psi_x: C64,
}

/// `s, s′, s″` for `s = 2a sin x / u`.
#[inline]
fn s_parts(x: f64, a: f64) -> (f64, f64, f64) {
    let (u, up, upp) = u_parts(x, a);
    let sn = x.sin();
    let cs = x.cos();
    let s = 2.0 * a * sn / u;
    let sp = 2.0 * a * cs / u - 2.0 * a * sn * up / (u * u);
    let spp = -2.0 * a * sn / u - 4.0 * a * cs * up / (u * u)
        - 2.0 * a * sn * upp / (u * u)
        + 4.0 * a * sn * up * up / (u * u * u);
    (s, sp, spp)
}

/// `h, h′, h″` of the closed form, valid for `x ≤ 0` and `k` away from
/// the guarded edge points.
fn h_parts(x: f64, k: C64, a: f64) -> (C64, C64, C64) {
    let eix = c64(x.cos(), x.sin());
    let emix = eix.conj();
    let bp_pole = eix / (k - 1.0);
    let bm_pole = emix / (k + 1.0);
    let b = bp_pole - bm_pole;
    let bp = I * (bp_pole + bm_pole);
    let bpp = -b;
    let (s, sp, spp) = s_parts(x, a);
    let h = 1.0 + b * s;
    let hp = bp * s + b * sp;
    let hpp = bpp * s + 2.0 * bp * sp + b * spp;
    (h, hp, hpp)
}

/// Exact Jost solution `(ψ, ψ′)` of `−ψ″ + q₀ψ = k²ψ` at `x ≤ 0`,
/// normalized `ψ ~ e^{−ikx}` as `x → −∞`.
///
/// Errors with [`CoreError::Pole`] within [`EDGE_GUARD`] of `k = ±1` and
/// with a domain error for `x > 0` (the closed form does not continue past
/// the support of the potential).
pub fn jost_q0(x: f64, k: C64, a: f64) -> Result<JostValue> {
    let x = ensure_finite(x, "x must be finite")?;
    if x > 0.0 {
        return Err(CoreError::Domain {
            what: "Jost closed form requires x <= 0",
        });
    }
    if a <= 0.0 || !a.is_finite() {
        return Err(CoreError::Domain {
            what: "a must be positive and finite",
        });
    }
    if (k - 1.0).norm() < EDGE_GUARD || (k + 1.0).norm() < EDGE_GUARD {
        return Err(CoreError::Pole { re: k.re, im: k.im });
    }
    let (h, hp, _) = h_parts(x, k, a);
    let phase = (-I * k * x).exp();
    Ok(JostValue {
        x,
        k,
        psi: phase * h,
        psi_x: phase * (hp - I * k * h),
    })
}

/// The initial datum computed as a Darboux transform of `q₀`:
/// `q = q₀ − 2 (log h)″` with `h` the (real, positive) profile of the Jost
/// solution at `k = iκ`.  Agrees with [`crate::potential::q`] identically;
/// the two routes share no code beyond `u`, so their agreement pins both.
///
/// At `k = iκ` the oscillatory factors combine to the real pair
/// `B = 2(κ sin x − cos x)/(1+κ²)`, `B′ = 2(κ cos x + sin x)/(1+κ²)`,
/// `B″ = −B`, and the exponential prefactor `e^{κx}` of the Jost solution
/// drops out of the logarithmic second derivative.
pub fn darboux_q(x: f64, p: &ResonanceParams) -> Result<f64> {
    let x = ensure_finite(x, "x must be finite")?;
    if x >= 0.0 {
        return Ok(0.0);
    }
    let kappa = p.kappa();
    let a = p.a();
    let den = 1.0 + kappa * kappa;
    let sn = x.sin();
    let cs = x.cos();
    let b = 2.0 * (kappa * sn - cs) / den;
    let bp = 2.0 * (kappa * cs + sn) / den;
    let bpp = -b;
    let (s, sp, spp) = s_parts(x, a);
    let h = 1.0 + b * s;
    if h <= 0.0 {
        return Err(CoreError::Domain {
            what: "Darboux profile h is non-positive",
        });
    }
    let hp = bp * s + b * sp;
    let hpp = bpp * s + 2.0 * bp * sp + b * spp;
    Ok(q0(x, a)? - 2.0 * (hpp * h - hp * hp) / (h * h))
}
