// SPDX-License-Identifier: MIT OR Apache-2.0
//! Oscillatory Riemann–Hilbert data on the critical ray `x/t = −12`:
//! the phase, the jump matrix, its triangular factorizations dressed by
//! the partial transmission coefficient, and the local parametrix model
//! at the band edge `k = 1`.
//!
//! With `Φ(k) = 4k³ + (x/t)k` and `ξ = e^{itΦ}`, the jump matrix on the
//! real axis is
//!
//! ```text
//! V = [ 1−|R|²   −R̄ ξ⁻² ]
//!     [ R ξ²        1    ]
//! ```
//!
//! and the dressed factorization reads `B₋⁻¹ B₊ = T₀₋^{σ₃} V T₀₊^{−σ₃}`
//! with `f^{σ₃} = diag(f, 1/f)`; outside the band `T₀₊ = T₀₋ = T₀`, and
//! the `B±` entries extend off the axis because the combination
//! `R(±k)/(T(k)T(−k))` is rational — see [`reflection_over_tt`].
//!
//! Near `k = 1` the scaling `k = 1 + (48t)^{−1/2} z` turns the dressed
//! entries into the four cross-ray jumps of the parabolic-cylinder model
//! problem with coefficient `ρ(t)` and profile `φ(z)`; the agreement
//! improves like `t^{−1/2}` in the *relative* entry error (the entries
//! themselves carry the non-constant modulus `|φ|² ∝ t^{−θ/2π}`, so an
//! absolute comparison would be meaningless).

use crate::error::{CoreError, Result};
use crate::mat2::Mat2;
use crate::params::ResonanceParams;
use crate::partial::{boundary_values, partial_transmission};
use crate::quad::QuadratureSpec;
use crate::scattering::reflection;
use crate::{c64, C64, I};
#[allow(unused_imports)] // inherent methods cover std; the trait backs no_std
use num_traits::Float;

const PI: f64 = core::f64::consts::PI;

/// Slope `x/t` of the critical ray on which the resonance asymptotics
/// live; the stationary points of `Φ` then sit at `k = ±1`.
pub const RESONANCE_RAY_SLOPE: f64 = -12.0;

/// The phase `Φ(k) = 4k³ + (x/t)·k`.
pub fn phase(k: C64, ray_slope: f64) -> C64 {
    4.0 * k * k * k + ray_slope * k
}

/// `ξ² = e^{2itΦ(k)}`, the squared oscillator entering every jump entry.
pub fn oscillator_squared(k: C64, t: f64, ray_slope: f64) -> C64 {
    (2.0 * I * t * phase(k, ray_slope)).exp()
}

/// The jump matrix `V(k)` for real `k` (away from the zeros of the
/// transmission denominators, which lie off the axis).
pub fn jump_matrix(k: f64, t: f64, ray_slope: f64, p: &ResonanceParams) -> Result<Mat2> {
    let kc = c64(k, 0.0);
    let r = reflection(kc, p)?;
    let xi2 = oscillator_squared(kc, t, ray_slope);
    Ok(Mat2::new(
        c64(1.0 - r.norm_sqr(), 0.0),
        -r.conj() / xi2,
        r * xi2,
        c64(1.0, 0.0),
    ))
}

/// The rational combination `R(k)/(T(k)T(−k))`, which is what continues
/// the interior triangular factors off the axis:
///
/// ```text
/// R(k)/(T(k)T(−k)) = 2ia (k−iκ)(k+k₋)(k+k₊) / (k³−k)²,
/// ```
///
/// an exact cancellation of the shared denominators.  Poles only at the
/// band points `k ∈ {0, ±1}`.
pub fn reflection_over_tt(k: C64, p: &ResonanceParams) -> Result<C64> {
    let band = k * k * k - k;
    if band.norm() < 1e-9 {
        return Err(CoreError::Pole { re: k.re, im: k.im });
    }
    let num = 2.0 * I * p.a() * (k - p.i_kappa()) * (k + p.pole_minus()) * (k + p.pole_plus());
    Ok(num / (band * band))
}

/// Exterior (`|Re k| > 1`) triangular factors `(B₋, B₊)` dressed with the
/// supplied value `t0 = T₀(k)`.
pub fn factor_exterior(
    k: C64,
    t: f64,
    ray_slope: f64,
    p: &ResonanceParams,
    t0: C64,
) -> Result<(Mat2, Mat2)> {
    let xi2 = oscillator_squared(k, t, ray_slope);
    let one = c64(1.0, 0.0);
    let zero = c64(0.0, 0.0);
    let b_minus = Mat2::new(one, reflection(-k, p)? * t0 * t0 / xi2, zero, one);
    let b_plus = Mat2::new(one, zero, reflection(k, p)? * xi2 / (t0 * t0), one);
    Ok((b_minus, b_plus))
}

/// Interior (`|Re k| < 1`) triangular factors `(B₋, B₊)` dressed with the
/// boundary values `T₀±`; built on [`reflection_over_tt`] so they stay
/// meaningful off the axis.
pub fn factor_interior(
    k: C64,
    t: f64,
    ray_slope: f64,
    p: &ResonanceParams,
    t0_plus: C64,
    t0_minus: C64,
) -> Result<(Mat2, Mat2)> {
    let xi2 = oscillator_squared(k, t, ray_slope);
    let one = c64(1.0, 0.0);
    let zero = c64(0.0, 0.0);
    let b_minus = Mat2::new(
        one,
        zero,
        -reflection_over_tt(k, p)? * xi2 / (t0_minus * t0_minus),
        one,
    );
    let b_plus = Mat2::new(
        one,
        -t0_plus * t0_plus * reflection_over_tt(-k, p)? / xi2,
        zero,
        one,
    );
    Ok((b_minus, b_plus))
}

/// The dressed jump `T₀₋^{σ₃} V T₀₊^{−σ₃}` at real `k`.
pub fn dressed_jump(
    k: f64,
    t: f64,
    ray_slope: f64,
    p: &ResonanceParams,
    t0_plus: C64,
    t0_minus: C64,
) -> Result<Mat2> {
    let v = jump_matrix(k, t, ray_slope, p)?;
    Ok(Mat2::sigma3_power(t0_minus)
        .mul(&v)
        .mul(&Mat2::sigma3_power(1.0 / t0_plus)))
}

/// Residual `max|B₋⁻¹B₊ − T₀₋^{σ₃} V T₀₊^{−σ₃}|` at real `k`, computing
/// the needed `T₀` values internally (boundary pair inside the band, the
/// continuous value outside).
pub fn factorization_residual(
    k: f64,
    t: f64,
    ray_slope: f64,
    p: &ResonanceParams,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let kc = c64(k, 0.0);
    let (t0_plus, t0_minus, factors) = if k.abs() > 1.0 {
        let t0 = partial_transmission(kc, p, spec)?.value;
        (t0, t0, factor_exterior(kc, t, ray_slope, p, t0)?)
    } else {
        let b = boundary_values(k, p, spec)?;
        (
            b.plus,
            b.minus,
            factor_interior(kc, t, ray_slope, p, b.plus, b.minus)?,
        )
    };
    let (b_minus, b_plus) = factors;
    let lhs = b_minus.inverse()?.mul(&b_plus);
    let rhs = dressed_jump(k, t, ray_slope, p, t0_plus, t0_minus)?;
    Ok(lhs.sub(&rhs).max_abs())
}

/// The scaled spectral variable of the band-edge parametrix,
/// `k = 1 + (48t)^{−1/2} z`.
pub fn scaled_k(z: C64, t: f64) -> C64 {
    1.0 + z / (48.0 * t).sqrt()
}

/// The small parameter `ε = 1/(48a²t)` of the band-edge model.
pub fn epsilon(t: f64, p: &ResonanceParams) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(CoreError::Regime { t });
    }
    Ok(1.0 / (48.0 * p.a() * p.a() * t))
}

/// The parametrix profile
/// `φ(z) = exp{(i/2π)·(log(1/ε)·Log z − Log² z)}`, with
/// `log(1/ε) = log(48a²t)`.  Principal logarithm; `z = 0` is excluded.
pub fn phi(z: C64, t: f64, p: &ResonanceParams) -> Result<C64> {
    if z.norm() == 0.0 {
        return Err(CoreError::Domain {
            what: "parametrix profile is singular at z = 0",
        });
    }
    let big = (1.0 / epsilon(t, p)?).ln();
    let lg = z.ln();
    Ok((I / (2.0 * PI) * (big * lg - lg * lg)).exp())
}

/// The unimodular coefficient of the parabolic-cylinder model,
///
/// ```text
/// ρ(t) = e^{−16it} · (1−iκ)/(1+iκ) · A₀⁻² ·
///        exp{(i/π)(log a·log 48t + ¼ log²48t)}.
/// ```
///
/// `a0` is the band-edge constant from
/// [`crate::partial::factor_a0`].
pub fn rho(t: f64, p: &ResonanceParams, a0: C64) -> Result<C64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(CoreError::Regime { t });
    }
    let kappa = p.kappa();
    let edge_refl = c64(1.0, -kappa) / c64(1.0, kappa);
    let l48 = (48.0 * t).ln();
    let osc = (I / PI * (p.a().ln() * l48 + 0.25 * l48 * l48)).exp();
    Ok((-16.0 * I * t).exp() * edge_refl / (a0 * a0) * osc)
}

/// The four rays of the parametrix cross, named by quadrant direction of
/// the scaled variable `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossRay {
    /// `arg z = −π/4` (exterior, lower half plane).
    SouthEast,
    /// `arg z = π/4` (exterior, upper half plane).
    NorthEast,
    /// `arg z = 3π/4` (interior, upper half plane).
    NorthWest,
    /// `arg z = −3π/4` (interior, lower half plane).
    SouthWest,
}

impl CrossRay {
    /// The ray angle in the `z` plane.
    pub fn angle(&self) -> f64 {
        match self {
            CrossRay::SouthEast => -PI / 4.0,
            CrossRay::NorthEast => PI / 4.0,
            CrossRay::NorthWest => 3.0 * PI / 4.0,
            CrossRay::SouthWest => -3.0 * PI / 4.0,
        }
    }

    /// All four rays.
    pub const ALL: [CrossRay; 4] = [
        CrossRay::SouthEast,
        CrossRay::NorthEast,
        CrossRay::NorthWest,
        CrossRay::SouthWest,
    ];
}

/// The nontrivial entry of the exact dressed factor on the given cross
/// ray, at `k = scaled_k(z, t)`, dressed with the supplied `t0 = T₀(k)`:
/// the `(1,2)` entry of `B₋⁻¹` (SE), `(2,1)` of `B₊` (NE), `(1,2)` of
/// `B₊` (NW), `(2,1)` of `B₋⁻¹` (SW).
pub fn cross_entry_exact(
    ray: CrossRay,
    z: C64,
    t: f64,
    p: &ResonanceParams,
    t0: C64,
) -> Result<C64> {
    let k = scaled_k(z, t);
    let xi2 = oscillator_squared(k, t, RESONANCE_RAY_SLOPE);
    Ok(match ray {
        CrossRay::SouthEast => -reflection(-k, p)? * t0 * t0 / xi2,
        CrossRay::NorthEast => reflection(k, p)? * xi2 / (t0 * t0),
        CrossRay::NorthWest => -t0 * t0 * reflection_over_tt(-k, p)? / xi2,
        CrossRay::SouthWest => reflection_over_tt(k, p)? * xi2 / (t0 * t0),
    })
}

/// The corresponding entry of the parabolic-cylinder model jump:
/// `V₁ = −ρ̄ φ² e^{−iz²/2}`, `V₂ = ρ e^{iz²/2}/φ²`,
/// `V₃ = V₁/(εz²)`, `V₄ = V₂/(εz²)`.
pub fn cross_entry_model(
    ray: CrossRay,
    z: C64,
    t: f64,
    p: &ResonanceParams,
    a0: C64,
) -> Result<C64> {
    let rho_t = rho(t, p, a0)?;
    let ph = phi(z, t, p)?;
    let eps = epsilon(t, p)?;
    let gauss_minus = (-I * z * z / 2.0).exp();
    let gauss_plus = (I * z * z / 2.0).exp();
    Ok(match ray {
        CrossRay::SouthEast => -rho_t.conj() * ph * ph * gauss_minus,
        CrossRay::NorthEast => rho_t * gauss_plus / (ph * ph),
        CrossRay::NorthWest => -rho_t.conj() * ph * ph * gauss_minus / (eps * z * z),
        CrossRay::SouthWest => rho_t * gauss_plus / (eps * ph * ph * z * z),
    })
}

/// The four Stokes multipliers of the model problem,
/// `[ρ̄, ρ, ρ̄/ε, ρ/ε]`, in cross-ray order SE, NE, NW, SW.
pub fn stokes_multipliers(t: f64, p: &ResonanceParams, a0: C64) -> Result<[C64; 4]> {
    let r = rho(t, p, a0)?;
    let eps = epsilon(t, p)?;
    Ok([r.conj(), r, r.conj() / eps, r / eps])
}
