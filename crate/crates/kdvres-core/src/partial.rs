// SPDX-License-Identifier: MIT OR Apache-2.0
//! The partial transmission coefficient
//!
//! ```text
//! T₀(k) = exp{ (1/2πi) ∫₋₁¹ log|T(s)|² / (s − k) ds },
//! ```
//!
//! analytic off the band `[−1, 1]`, together with its boundary values on
//! the band, the constant `A₀` governing its behaviour at the band edge,
//! and the local model `T₀ ≈ A₀·exp{iν·Log(k−1) + Log²(k−1)/(2πi)}`.
//!
//! Two independent evaluation routes are provided.  The *direct* route
//! integrates the defining Cauchy integral over the panels `[−1, 0]` and
//! `[0, 1]` so that every logarithmic singularity of `log|T|²` (at
//! `s = 0, ±1`) sits at a panel endpoint where the quadrature supplies
//! exact distances.  The *reduced* route exploits evenness of `log|T|²`
//! and splits off the closed-form part analytically:
//!
//! ```text
//! T₀ = ((k−1)/(k+1))^{iν} · exp{(I₁+I₂)/(πi)} · exp{(k/πi)∫₀¹ g(s)/(s²−k²) ds},
//! I₁ = −Li₂(1/(1−k)),   I₂ = Li₂(1/(1+k)),
//! ```
//!
//! with `g = log|τ|²` the edge-normalized band density, which vanishes at
//! `s = 1` (slope `−3`).  The two routes share only the band density and
//! cross-check each other to quadrature accuracy.

use crate::error::{CoreError, Result};
use crate::params::ResonanceParams;
use crate::quad::{integrate, QuadratureSpec};
use crate::scattering::{log_abs_t_sq, log_abs_t_sq_deriv};
use crate::special::dilog;
use crate::{c64, C64, I};
#[allow(unused_imports)] // inherent methods cover std; the trait backs no_std
use num_traits::Float;

const PI: f64 = core::f64::consts::PI;

/// Distance from the band edge points `k = ±1` below which evaluation is
/// refused: the Cauchy integral itself degenerates there (the edge model
/// and [`factor_a0`] describe that limit instead).
pub const BAND_EDGE_GUARD: f64 = 1e-8;

/// Within this distance of the removable point the principal-value
/// integrand is replaced by its Taylor limit `f′(k)`.
const PV_TAYLOR_GUARD: f64 = 1e-7;

/// A computed value together with the propagated quadrature error
/// estimate (absolute, on the value).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialValue {
    /// The value of `T₀` (or a boundary value thereof).
    pub value: C64,
    /// Absolute error estimate propagated from the quadrature.
    pub est_error: f64,
}

/// Boundary pair on the band from above (`+`) and below (`−`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPair {
    /// `T₀₊(k) = lim_{ε→0⁺} T₀(k + iε)`.
    pub plus: C64,
    /// `T₀₋(k) = lim_{ε→0⁺} T₀(k − iε)`.
    pub minus: C64,
    /// Absolute error estimate on either exponent.
    pub est_error: f64,
}

/// `log|T(s)|²` on the panel `[−1, 0]`, evaluated through the exact
/// endpoint distances: `s + 1 = dl`, `s = −dr`.
#[inline]
fn band_density_neg(x: f64, dl: f64, dr: f64, a: f64) -> f64 {
    let p = -dr * (x - 1.0) * dl;
    2.0 * p.abs().ln() - (p * p + 4.0 * a * a).ln()
}

/// `log|T(s)|²` on the panel `[0, 1]`: `s = dl`, `s − 1 = −dr`.
#[inline]
fn band_density_pos(x: f64, dl: f64, dr: f64, a: f64) -> f64 {
    let p = dl * -dr * (x + 1.0);
    2.0 * p.abs().ln() - (p * p + 4.0 * a * a).ln()
}

/// Edge-normalized band density `g(s) = log|τ(s)|²` on `(0, 1)`, computed
/// so that the zero at `s = 1` is hit without cancellation:
/// for `s > 1/2`,
/// `g = −log1p[(1−s)·{s²(1−s)(1+s)² + a²(s+2)(s²+s+2)}/(a²s²(1+s)²)]`,
/// an exact rearrangement; for `s ≤ 1/2` the direct form with `log dl`.
#[inline]
fn edge_density(x: f64, dl: f64, dr: f64, a: f64) -> f64 {
    if x > 0.5 {
        let one_plus = 1.0 + x;
        let num = x * x * dr * one_plus * one_plus + a * a * (x + 2.0) * (x * x + x + 2.0);
        -(dr * num / (a * a * x * x * one_plus * one_plus)).ln_1p()
    } else {
        let p = dl * (x - 1.0) * (x + 1.0);
        2.0 * (a.ln() + dl.ln() + (1.0 + x).ln()) - (p * p + 4.0 * a * a).ln()
    }
}

fn reject_on_band(k: C64) -> Result<()> {
    if (k - 1.0).norm() < BAND_EDGE_GUARD || (k + 1.0).norm() < BAND_EDGE_GUARD {
        return Err(CoreError::Pole { re: k.re, im: k.im });
    }
    if k.im == 0.0 && k.re.abs() <= 1.0 {
        return Err(CoreError::Domain {
            what: "k lies on the band; use boundary_values for the limits",
        });
    }
    Ok(())
}

/// Near the open band the Cauchy kernel has a pole close to the interior
/// of `[0, 1]`, which endpoint-clustered quadrature cannot see; splitting
/// the panel at `|Re k|` moves it next to an endpoint, where the node
/// density grows without bound.  Returns the split point when needed.
fn near_band_split(k: C64) -> Option<f64> {
    let kr = k.re.abs();
    (k.im.abs() < 0.05 && kr > BAND_EDGE_GUARD && kr < 1.0 - BAND_EDGE_GUARD).then_some(kr)
}

/// `∫₀¹ f(s)/(s²−k²) ds` with the near-band panel split applied; `f` is
/// called as `f(x, dl, dr1)` where `dr1` is the exact distance to `1`.
fn cauchy_over_band<F: Fn(f64, f64, f64) -> f64>(
    k: C64,
    spec: &QuadratureSpec,
    f: F,
) -> Result<crate::quad::QuadResult> {
    let k2 = k * k;
    if let Some(kr) = near_band_split(k) {
        let off = 1.0 - kr;
        let left = integrate(spec, 0.0, kr, |x, dl, dr| {
            c64(f(x, dl, dr + off), 0.0) / (c64(x * x, 0.0) - k2)
        })?;
        let right = integrate(spec, kr, 1.0, |x, _dl, dr| {
            c64(f(x, x, dr), 0.0) / (c64(x * x, 0.0) - k2)
        })?;
        Ok(crate::quad::QuadResult {
            value: left.value + right.value,
            est_error: left.est_error + right.est_error,
        })
    } else {
        integrate(spec, 0.0, 1.0, |x, dl, dr| {
            c64(f(x, dl, dr), 0.0) / (c64(x * x, 0.0) - k2)
        })
    }
}

/// The regular factor `T₀^{(reg)}(k) = exp{(k/πi)∫₀¹ g(s)/(s²−k²) ds}`
/// with the edge-normalized density `g = log|τ|²`.  Because `g(1) = 0`
/// the factor extends continuously to the band edges; the exact points
/// `k = ±1` are accepted and evaluated through the cancellation-free
/// kernel `s²−1 = −dr·(1+s)`.
pub fn factor_regular(
    k: C64,
    p: &ResonanceParams,
    spec: &QuadratureSpec,
) -> Result<PartialValue> {
    let a = p.a();
    let quad = if k.im == 0.0 && k.re.abs() == 1.0 {
        integrate(spec, 0.0, 1.0, |x, dl, dr| {
            c64(-edge_density(x, dl, dr, a) / (dr * (1.0 + x)), 0.0)
        })?
    } else {
        reject_on_band(k)?;
        cauchy_over_band(k, spec, |x, dl, dr| edge_density(x, dl, dr, a))?
    };
    let value = (k / (PI * I) * quad.value).exp();
    Ok(PartialValue {
        value,
        est_error: value.norm() * quad.est_error / PI,
    })
}

/// The singular factor
/// `T₀^{(sng)}(k) = ((k−1)/(k+1))^{iν} · exp{(k/πi)∫₀¹ log(1−s)²/(s²−k²) ds}`
/// in dilogarithm closed form, using
/// `(k/πi)∫₀¹ log(1−s)²/(s²−k²) ds = [Li₂(1/(1+k)) − Li₂(1/(1−k))]/(πi)`:
///
/// ```text
/// T₀^{(sng)} = ((k−1)/(k+1))^{iν} · exp{[Li₂(1/(1+k)) − Li₂(1/(1−k))]/(πi)}.
/// ```
pub fn factor_singular(k: C64, p: &ResonanceParams) -> Result<C64> {
    reject_on_band(k)?;
    let i1 = -dilog(1.0 / (1.0 - k));
    let i2 = dilog(1.0 / (1.0 + k));
    let exponent = I * p.nu() * ((k - 1.0) / (k + 1.0)).ln() + (i1 + i2) / (PI * I);
    Ok(exponent.exp())
}

/// [`factor_singular`] with the inner integral done by endpoint-aware
/// quadrature instead of the dilogarithm closed form; the two routes
/// agreeing is the accuracy certificate for the branch handling.
pub fn factor_singular_by_quadrature(
    k: C64,
    p: &ResonanceParams,
    spec: &QuadratureSpec,
) -> Result<PartialValue> {
    reject_on_band(k)?;
    let quad = cauchy_over_band(k, spec, |_x, _dl, dr| 2.0 * dr.ln())?;
    let power = (I * p.nu() * ((k - 1.0) / (k + 1.0)).ln()).exp();
    let value = power * (k / (PI * I) * quad.value).exp();
    Ok(PartialValue {
        value,
        est_error: value.norm() * quad.est_error / PI,
    })
}

/// `T₀(k)` off the band via the reduced (dilogarithm + edge-density)
/// route, assembled as [`factor_singular`]`·`[`factor_regular`].  This is
/// the primary evaluation path.
pub fn partial_transmission(
    k: C64,
    p: &ResonanceParams,
    spec: &QuadratureSpec,
) -> Result<PartialValue> {
    let sng = factor_singular(k, p)?;
    let reg = factor_regular(k, p, spec)?;
    Ok(PartialValue {
        value: sng * reg.value,
        est_error: sng.norm() * reg.est_error,
    })
}

/// `T₀(k)` off the band by direct double-exponential quadrature of the
/// defining Cauchy integral; structurally independent cross-check of
/// [`partial_transmission`].
pub fn partial_transmission_direct(
    k: C64,
    p: &ResonanceParams,
    spec: &QuadratureSpec,
) -> Result<PartialValue> {
    reject_on_band(k)?;
    let a = p.a();
    let left = integrate(spec, -1.0, 0.0, |x, dl, dr| {
        band_density_neg(x, dl, dr, a) / (c64(x, 0.0) - k)
    })?;
    let right = integrate(spec, 0.0, 1.0, |x, dl, dr| {
        band_density_pos(x, dl, dr, a) / (c64(x, 0.0) - k)
    })?;
    let exponent = (left.value + right.value) / (2.0 * PI * I);
    let value = exponent.exp();
    Ok(PartialValue {
        value,
        est_error: value.norm() * (left.est_error + right.est_error) / (2.0 * PI),
    })
}

/// Principal value `PV ∫₋₁¹ log|T(s)|²/(s−k) ds` for `k ∈ (0, 1)`.
/// Panels `[−1, 0]`, `[0, k]`, `[k, 1]` place every singular point of the
/// density and the removable point at panel endpoints.
fn band_pv_exponent(k: f64, p: &ResonanceParams, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    let a = p.a();
    let fk = log_abs_t_sq(k, p);
    let fpk = log_abs_t_sq_deriv(k, p);
    let outer = integrate(spec, -1.0, 0.0, |x, dl, dr| {
        c64(band_density_neg(x, dl, dr, a) / (x - k), 0.0)
    })?;
    // On [0, k] the removable point is the right endpoint: s − k = −dr.
    let inner_left = integrate(spec, 0.0, k, |x, dl, dr| {
        if dr < PV_TAYLOR_GUARD {
            c64(fpk, 0.0)
        } else {
            let p3 = dl * (x - 1.0) * (x + 1.0);
            let f = 2.0 * p3.abs().ln() - (p3 * p3 + 4.0 * a * a).ln();
            c64((f - fk) / -dr, 0.0)
        }
    })?;
    // On [k, 1] it is the left endpoint: s − k = dl.
    let inner_right = integrate(spec, k, 1.0, |x, dl, dr| {
        if dl < PV_TAYLOR_GUARD {
            c64(fpk, 0.0)
        } else {
            let p3 = x * -dr * (x + 1.0);
            let f = 2.0 * p3.abs().ln() - (p3 * p3 + 4.0 * a * a).ln();
            c64((f - fk) / dl, 0.0)
        }
    })?;
    let pv = outer.value.re + inner_left.value.re + inner_right.value.re
        + fk * ((1.0 - k) / k).ln();
    Ok((
        pv,
        outer.est_error + inner_left.est_error + inner_right.est_error,
    ))
}

/// Boundary values `T₀±(k)` for real `k` strictly inside the band and away
/// from the singular points `{−1, 0, 1}` of the density.
///
/// From the Plemelj formula the shared principal-value exponent is
/// complemented by `± log|T(k)|²/2`, so
/// `T₀± = exp{PV/(2πi)} · |T(k)|^{±1}`.  Negative `k` is mapped through
/// the exact inversion symmetry `T₀₊(−k) = 1/T₀₋(k)` (the principal value
/// of an even density is odd in `k`).
pub fn boundary_values(
    k: f64,
    p: &ResonanceParams,
    spec: &QuadratureSpec,
) -> Result<BoundaryPair> {
    if !k.is_finite() || k.abs() >= 1.0 - BAND_EDGE_GUARD || k.abs() < BAND_EDGE_GUARD {
        return Err(CoreError::Domain {
            what: "boundary values need k inside (-1, 1), away from 0 and the edges",
        });
    }
    if k < 0.0 {
        let mirrored = boundary_values(-k, p, spec)?;
        return Ok(BoundaryPair {
            plus: 1.0 / mirrored.minus,
            minus: 1.0 / mirrored.plus,
            est_error: mirrored.est_error,
        });
    }
    let (pv, est) = band_pv_exponent(k, p, spec)?;
    // exp{PV/(2πi)} with real PV is the unimodular factor e^{−i·PV/2π}.
    let unimodular = (-I * pv / (2.0 * PI)).exp();
    let half_jump = (0.5 * log_abs_t_sq(k, p)).exp();
    Ok(BoundaryPair {
        plus: unimodular * half_jump,
        minus: unimodular / half_jump,
        est_error: est / (2.0 * PI),
    })
}

/// `J = ∫₀¹ g(s)/(1−s²) ds` with `g = log|τ|²`: the regular part of the
/// band-edge exponent, an ingredient of both [`factor_a0`] and the phase
/// shift of the long-time asymptotics.
pub fn j_regular(p: &ResonanceParams, spec: &QuadratureSpec) -> Result<f64> {
    let a = p.a();
    let r = integrate(spec, 0.0, 1.0, |x, dl, dr| {
        c64(edge_density(x, dl, dr, a) / (dr * (1.0 + x)), 0.0)
    })?;
    Ok(r.value.re)
}

/// The band-edge constant `A₀` of the local model
/// `T₀(k) ≈ A₀ · exp{iν·Log(k−1) + Log²(k−1)/(2πi)}` as `k → 1`:
///
/// ```text
/// A₀ = exp{(i/π)·[J − πν·log 2 − π²/6 − (π²/12 − log²2/2)]},
/// ```
///
/// unimodular because the bracket is real.  The last bracket term is the
/// closed form of `∫₀¹ log s/(s−2) ds`.
pub fn factor_a0(p: &ResonanceParams, spec: &QuadratureSpec) -> Result<C64> {
    let j = j_regular(p, spec)?;
    let ln2 = core::f64::consts::LN_2;
    let bracket = j - PI * p.nu() * ln2 - PI * PI / 6.0 - (PI * PI / 12.0 - 0.5 * ln2 * ln2);
    Ok((I * bracket / PI).exp())
}

/// The band-edge model `A₀·exp{iν·Log(k−1) + Log²(k−1)/(2πi)}`,
/// approximating `T₀(k)` as `k → 1` off the band.
pub fn transmission_model_near_one(k: C64, a0: C64, nu: f64) -> C64 {
    let lg = (k - 1.0).ln();
    a0 * (I * nu * lg + lg * lg / (2.0 * PI * I)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scattering::{reflection, transmission};
    use proptest::prelude::*;

    fn p2() -> ResonanceParams {
        ResonanceParams::new(2.0).unwrap()
    }

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    fn close(a: C64, b: C64, eps: f64) -> bool {
        (a - b).norm() <= eps
    }

    #[test]
    fn reference_values_off_the_band() {
        // Frozen from an independent 30-digit evaluation.
        let p = p2();
        let t = partial_transmission(c64(3.0, 2.0), &p, &spec()).unwrap();
        assert!(
            close(
                t.value,
                c64(0.56329679986347568, -0.36194573916542134),
                1e-11
            ),
            "T0(3+2i) = {}",
            t.value
        );
        let t = partial_transmission(c64(0.0, 10.0), &p, &spec()).unwrap();
        assert!(
            close(t.value, c64(0.77995645090972409, 0.0), 1e-11),
            "T0(10i) = {}",
            t.value
        );
    }

    #[test]
    fn the_two_routes_agree() {
        let p = p2();
        for &k in &[
            c64(3.0, 2.0),
            c64(0.5, 0.5),
            c64(-1.2, 0.3),
            c64(0.0, 0.7),
            c64(2.0, -0.01),
            c64(1.0001, 0.0001),
        ] {
            let r1 = partial_transmission(k, &p, &spec()).unwrap().value;
            let r2 = partial_transmission_direct(k, &p, &spec()).unwrap().value;
            assert!(
                (r1 - r2).norm() < 1e-9 * r1.norm().max(1.0),
                "k = {k}: {r1} vs {r2}"
            );
        }
    }

    #[test]
    fn boundary_reference_values() {
        let p = p2();
        let b = boundary_values(0.5, &p, &spec()).unwrap();
        assert!(
            close(
                b.plus,
                c64(-0.0022004387863653333, -0.037409000348767629),
                1e-10
            ),
            "T0+(0.5) = {}",
            b.plus
        );
        assert!(
            close(
                b.minus,
                c64(-1.5669569090906023, -26.639364803916859),
                2e-7
            ),
            "T0-(0.5) = {}",
            b.minus
        );
    }

    #[test]
    fn boundary_jump_is_one_minus_reflection_squared() {
        let p = p2();
        for j in 0..20 {
            let k = -0.93 + 1.86 * (j as f64 + 0.5) / 20.0;
            if k.abs() < 0.02 {
                continue;
            }
            let b = boundary_values(k, &p, &spec()).unwrap();
            let r = reflection(c64(k, 0.0), &p).unwrap();
            let jump = b.minus * (1.0 - r.norm_sqr());
            assert!(
                (b.plus - jump).norm() < 1e-10 * b.plus.norm().max(1.0),
                "k = {k}"
            );
        }
    }

    #[test]
    fn boundary_matches_the_off_band_limit() {
        // T₀(k ± iδ) → T₀±(k): first-order approach in δ.
        let p = p2();
        let k = 0.5;
        let b = boundary_values(k, &p, &spec()).unwrap();
        let above = partial_transmission(c64(k, 1e-4), &p, &spec()).unwrap().value;
        let below = partial_transmission(c64(k, -1e-4), &p, &spec()).unwrap().value;
        assert!((above / b.plus - 1.0).norm() < 5e-3);
        assert!((below / b.minus - 1.0).norm() < 5e-3);
    }

    #[test]
    fn inversion_and_conjugation_symmetries() {
        let p = p2();
        // Inversion: T₀(k)·T₀(−k) = 1.  Schwarz reflection acts through
        // the imaginary axis: T₀(−k̄) = conj T₀(k) (the exponent is a
        // Cauchy integral of a real density divided by 2πi, so plain
        // conjugation inverts the value instead: T₀(k̄) = 1/conj T₀(k)).
        for &k in &[c64(2.0, 1.0), c64(0.3, 0.9), c64(-1.4, -0.2), c64(0.0, 0.35)] {
            let t = partial_transmission(k, &p, &spec()).unwrap().value;
            let t_neg = partial_transmission(-k, &p, &spec()).unwrap().value;
            let t_refl = partial_transmission(-k.conj(), &p, &spec()).unwrap().value;
            let t_conj = partial_transmission(k.conj(), &p, &spec()).unwrap().value;
            assert!(close(t * t_neg, c64(1.0, 0.0), 1e-10), "inversion at {k}");
            assert!(close(t_refl, t.conj(), 1e-10), "reflection at {k}");
            assert!(
                close(t_conj * t.conj(), c64(1.0, 0.0), 1e-10),
                "conjugation at {k}"
            );
        }
    }

    #[test]
    fn imaginary_axis_values_are_real_and_tend_to_one() {
        let p = p2();
        for y in [0.3, 1.0, 10.0] {
            let t = partial_transmission(c64(0.0, y), &p, &spec()).unwrap().value;
            assert!(t.im.abs() < 1e-12, "y = {y}: {t}");
        }
        let far = partial_transmission(c64(0.0, 1e4), &p, &spec()).unwrap().value;
        assert!((far - 1.0).norm() < 3e-4, "T0(1e4 i) = {far}");
    }

    #[test]
    fn unimodular_for_real_k_outside_the_band() {
        let p = p2();
        for k in [1.5, 2.0, -3.0, 10.0] {
            let t = partial_transmission(c64(k, 0.0), &p, &spec()).unwrap().value;
            assert!((t.norm() - 1.0).abs() < 1e-11, "k = {k}: |T0| = {}", t.norm());
        }
    }

    #[test]
    fn matches_full_transmission_near_zero() {
        // T₀/T → 1 as k → 0 (the band density equals the full one there).
        let p = p2();
        let mut prev = f64::INFINITY;
        for y in [1e-2, 1e-3, 1e-4] {
            let k = c64(0.0, y);
            let t0 = partial_transmission(k, &p, &spec()).unwrap().value;
            let t = transmission(k, &p).unwrap();
            let dev = (t0 / t - 1.0).norm();
            assert!(dev < prev, "ratio deviation not shrinking at y = {y}");
            prev = dev;
        }
        assert!(prev < 1e-2, "final deviation {prev}");
    }

    #[test]
    fn edge_constant_reference_value_and_modulus() {
        let p = p2();
        let j = j_regular(&p, &spec()).unwrap();
        assert!(
            (j - -3.2912007749457357).abs() < 1e-11,
            "J = {j}"
        );
        let a0 = factor_a0(&p, &spec()).unwrap();
        assert!(
            close(a0, c64(-0.51487035186579539, -0.85726805654333817), 1e-10),
            "A0 = {a0}"
        );
        assert!((a0.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn edge_model_error_decreases_towards_the_edge() {
        let p = p2();
        let a0 = factor_a0(&p, &spec()).unwrap();
        let dir = c64(core::f64::consts::FRAC_PI_4.cos(), core::f64::consts::FRAC_PI_4.sin());
        let mut prev = f64::INFINITY;
        for eps in [1e-2, 1e-3, 1e-4] {
            let k = 1.0 + eps * dir;
            let t0 = partial_transmission(k, &p, &spec()).unwrap().value;
            let model = transmission_model_near_one(k, a0, p.nu());
            let rel = ((t0 - model) / t0).norm();
            assert!(rel < prev, "eps = {eps}: rel err {rel} did not decrease");
            prev = rel;
        }
        assert!(prev < 5e-2, "rel err at eps=1e-4: {prev}");
    }

    #[test]
    fn rejects_band_and_edge_points() {
        let p = p2();
        assert!(partial_transmission(c64(0.5, 0.0), &p, &spec()).is_err());
        assert!(partial_transmission(c64(1.0, 0.0), &p, &spec()).is_err());
        assert!(matches!(
            partial_transmission(c64(1.0, 1e-9), &p, &spec()),
            Err(CoreError::Pole { .. })
        ));
        assert!(boundary_values(0.0, &p, &spec()).is_err());
        assert!(boundary_values(1.0, &p, &spec()).is_err());
        assert!(boundary_values(f64::NAN, &p, &spec()).is_err());
    }

    #[test]
    fn factorization_matches_the_direct_route() {
        // reg·sng assembled from the two named factors must reproduce the
        // structurally independent direct Cauchy evaluation.
        let p = p2();
        for &k in &[c64(0.0, 2.0), c64(0.0, -2.0), c64(1.7, 0.8), c64(-0.4, -1.2)] {
            let reg = factor_regular(k, &p, &spec()).unwrap().value;
            let sng = factor_singular(k, &p).unwrap();
            let direct = partial_transmission_direct(k, &p, &spec()).unwrap().value;
            assert!(
                close(reg * sng, direct, 1e-8),
                "k = {k}: {} vs {direct}",
                reg * sng
            );
        }
    }

    #[test]
    fn singular_factor_routes_agree() {
        // Dilogarithm closed form against endpoint-aware quadrature,
        // including points that exercise the near-band panel split.
        let p = p2();
        for &k in &[c64(0.0, 2.0), c64(3.0, 0.5), c64(0.5, 0.7), c64(-2.5, 0.1), c64(0.6, 0.01)]
        {
            let closed = factor_singular(k, &p).unwrap();
            let quad = factor_singular_by_quadrature(k, &p, &spec()).unwrap().value;
            assert!(
                (closed - quad).norm() <= 1e-10 * closed.norm().max(1.0),
                "k = {k}: {closed} vs {quad}"
            );
        }
    }

    #[test]
    fn regular_factor_extends_to_the_band_edges() {
        // g(1) = 0 makes the exponent finite at k = ±1; there the exponent
        // is (±1/πi)·∫ g/(s²−1), purely imaginary, so the value is
        // unimodular.  Continuity towards the edge is O(k − 1).
        let p = p2();
        for edge in [1.0, -1.0] {
            let v = factor_regular(c64(edge, 0.0), &p, &spec()).unwrap().value;
            assert!(v.is_finite() && (v.norm() - 1.0).abs() < 1e-10, "edge {edge}: {v}");
        }
        let at_edge = factor_regular(c64(1.0, 0.0), &p, &spec()).unwrap().value;
        let near = factor_regular(c64(1.0 + 1e-6, 0.0), &p, &spec()).unwrap().value;
        assert!((at_edge - near).norm() < 1e-4, "{at_edge} vs {near}");
    }

    #[test]
    fn edge_density_forms_agree_at_the_seam() {
        // The log1p rearrangement and the direct form must match where
        // they hand over (x = 1/2) and elsewhere in the interior.
        let p = p2();
        for x in [0.4, 0.499, 0.501, 0.6, 0.9] {
            let direct = crate::scattering::log_abs_tau_sq(x, &p);
            let stable = edge_density(x, x, 1.0 - x, p.a());
            assert!(
                (direct - stable).abs() < 1e-12 * direct.abs().max(1.0),
                "x = {x}: {direct} vs {stable}"
            );
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn inversion_symmetry_generic(re in -2.5f64..2.5, im in 0.05f64..2.5) {
            let p = p2();
            let k = c64(re, im);
            let t = partial_transmission(k, &p, &spec()).unwrap().value;
            let t_neg = partial_transmission(-k, &p, &spec()).unwrap().value;
            prop_assert!((t * t_neg - 1.0).norm() < 1e-9);
        }

        #[test]
        fn boundary_jump_generic(k in 0.05f64..0.95) {
            let p = ResonanceParams::new(1.0).unwrap();
            let b = boundary_values(k, &p, &spec()).unwrap();
            let r = reflection(c64(k, 0.0), &p).unwrap();
            prop_assert!((b.plus - b.minus * (1.0 - r.norm_sqr())).norm()
                < 1e-9 * b.plus.norm().max(1.0));
        }
    }
}
