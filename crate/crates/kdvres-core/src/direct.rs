// SPDX-License-Identifier: MIT OR Apache-2.0
//! Recovery of the scattering coefficients by direct integration: seed the
//! left Jost solution `ψ ~ e^{−ikx}` at `x = −L`, integrate
//! `ψ″ = (q − k²)ψ` up to the origin, and match against the free field on
//! the right half line:
//!
//! ```text
//! T = 2ik / (ik·ψ(0) − ψ′(0)),      R = T·ψ(0) − 1.
//! ```
//!
//! The truncation at `−L` injects an `O(1/L)` error through the
//! oscillatory `−4 sin(2x+δ)/x` tail of the potential.  Three seeds trade
//! accuracy for generality:
//!
//! * plane wave `ψ(−L) = e^{ikL}` — the `O(1/L)` baseline;
//! * tail-corrected `ψ = e^{−ikx}(1 + h)` with the first-order profile
//!   `h = (α₊e^{2ix} + α₋e^{−2ix})/x`, `α± = i e^{±iδ}/(2(k∓1))`, which
//!   cancels the leading tail reflection (measured ≈ 5× smaller error);
//! * the exact closed-form solution (background potential only), leaving
//!   pure integrator error.

use crate::error::{CoreError, Result};
use crate::jost::jost_q0;
use crate::ode::{integrate_schroedinger, OdeSolveConfig};
use crate::params::ResonanceParams;
use crate::potential::{q, q0, tail_delta};
use crate::{c64, C64, I};
#[allow(unused_imports)] // inherent methods cover std; the trait backs no_std
use num_traits::Float;

/// Matching is refused when the denominator `ik·ψ(0) − ψ′(0)` falls below
/// this (it equals `2ik/T`, so it only degenerates at a genuine zero of
/// the data or a blown-up integration).
const DEGENERATE_GUARD: f64 = 1e-12;

/// Minimum distance of `k` from the band points `±1` and from `0`, where
/// the `O(1/L)` truncation error constants blow up.
const K_EDGE_MARGIN: f64 = 0.05;
const K_ZERO_MARGIN: f64 = 0.2;

/// How the solution is seeded at `x = −L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Seed {
    /// Bare `e^{−ikx}`: `O(1/L)` truncation error.
    PlaneWave,
    /// First-order tail-corrected profile: same order, ≈ 5× smaller.
    TailCorrected,
    /// Exact closed-form solution — background potential only.
    ExactJost,
}

impl Seed {
    /// Truncation prefactor entering the error estimate.
    fn truncation_factor(self) -> f64 {
        match self {
            Seed::PlaneWave => 1.0,
            Seed::TailCorrected => 0.2,
            Seed::ExactJost => 0.0,
        }
    }
}

/// Recovered coefficients at one wavenumber, with an a-priori error
/// estimate `(1/|k−1| + 1/|k+1| + 1)/L · c_seed + 10⁴·rel_tol`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringRecovery {
    /// The (real) wavenumber.
    pub k: f64,
    /// Recovered transmission coefficient.
    pub t: C64,
    /// Recovered reflection coefficient.
    pub r: C64,
    /// A-priori absolute error estimate on either coefficient.
    pub est_error: f64,
}

fn check_k(k: f64) -> Result<()> {
    if !k.is_finite() {
        return Err(CoreError::Domain {
            what: "k must be finite",
        });
    }
    if k.abs() < K_ZERO_MARGIN {
        return Err(CoreError::Domain {
            what: "recovery needs |k| >= 0.2",
        });
    }
    if (k - 1.0).abs() < K_EDGE_MARGIN || (k + 1.0).abs() < K_EDGE_MARGIN {
        return Err(CoreError::Domain {
            what: "recovery needs |k -+ 1| >= 0.05",
        });
    }
    Ok(())
}

/// Seed pair `(ψ, ψ′)` at `x = −L` for the oscillatory-tail potentials;
/// `delta` is the tail phase (`0` for the background).
fn seed_values(seed: Seed, k: f64, l: f64, delta: f64, a: f64) -> Result<(C64, C64)> {
    let kc = c64(k, 0.0);
    let carrier = (I * kc * l).exp(); // e^{−ikx} at x = −L
    match seed {
        Seed::PlaneWave => Ok((carrier, -I * kc * carrier)),
        Seed::TailCorrected => {
            let x = -l;
            let alpha_p = I * (I * delta).exp() / (2.0 * (k - 1.0));
            let alpha_m = I * (-I * delta).exp() / (2.0 * (k + 1.0));
            let e2 = (2.0 * I * x).exp();
            let h = (alpha_p * e2 + alpha_m / e2) / x;
            let hp = (2.0 * I * alpha_p * e2 - 2.0 * I * alpha_m / e2) / x
                - (alpha_p * e2 + alpha_m / e2) / (x * x);
            Ok((carrier * (1.0 + h), carrier * (-I * kc * (1.0 + h) + hp)))
        }
        Seed::ExactJost => {
            let v = jost_q0(-l, kc, a)?;
            Ok((v.psi, v.psi_x))
        }
    }
}

fn match_at_origin(k: f64, psi: C64, dpsi: C64) -> Result<(C64, C64)> {
    let ik = I * k;
    let denom = ik * psi - dpsi;
    if denom.norm() < DEGENERATE_GUARD {
        return Err(CoreError::DegenerateMatching);
    }
    let t = 2.0 * ik / denom;
    Ok((t, t * psi - 1.0))
}

fn estimate(k: f64, cfg: &OdeSolveConfig, seed: Seed) -> f64 {
    let l = cfg.left_cutoff;
    (1.0 / (k - 1.0).abs() + 1.0 / (k + 1.0).abs() + 1.0) / l * seed.truncation_factor()
        + 1e4 * cfg.rel_tol
}

/// Recover `(T, R)` of the background potential `q₀(·, a)`.
pub fn recover_background(
    k: f64,
    a: f64,
    seed: Seed,
    cfg: &OdeSolveConfig,
) -> Result<ScatteringRecovery> {
    check_k(k)?;
    cfg.validate()?;
    let l = cfg.left_cutoff;
    let (p0, d0) = seed_values(seed, k, l, 0.0, a)?;
    let (psi, dpsi) =
        integrate_schroedinger(|x| q0(x, a).unwrap_or(f64::NAN), c64(k, 0.0), -l, 0.0, p0, d0, cfg)?;
    let (t, r) = match_at_origin(k, psi, dpsi)?;
    Ok(ScatteringRecovery {
        k,
        t,
        r,
        est_error: estimate(k, cfg, seed),
    })
}

/// Recover `(T, R)` of the initial datum `q`.  The exact seed is only
/// available for the background potential.
pub fn recover_initial_datum(
    k: f64,
    p: &ResonanceParams,
    seed: Seed,
    cfg: &OdeSolveConfig,
) -> Result<ScatteringRecovery> {
    if seed == Seed::ExactJost {
        return Err(CoreError::Config {
            what: "the exact seed applies to the background potential only",
        });
    }
    check_k(k)?;
    cfg.validate()?;
    let l = cfg.left_cutoff;
    let (p0, d0) = seed_values(seed, k, l, tail_delta(p), p.a())?;
    let (psi, dpsi) = integrate_schroedinger(
        |x| q(x, p).unwrap_or(f64::NAN),
        c64(k, 0.0),
        -l,
        0.0,
        p0,
        d0,
        cfg,
    )?;
    let (t, r) = match_at_origin(k, psi, dpsi)?;
    Ok(ScatteringRecovery {
        k,
        t,
        r,
        est_error: estimate(k, cfg, seed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scattering::{reflection, transmission, transmission_free};

    fn cfg_with_l(l: f64) -> OdeSolveConfig {
        OdeSolveConfig {
            left_cutoff: l,
            ..OdeSolveConfig::default()
        }
    }

    #[test]
    fn recovers_initial_datum_coefficients_within_estimate() {
        let p = ResonanceParams::new(2.0).unwrap();
        let cfg = cfg_with_l(400.0);
        for k in [0.5, 2.0] {
            let rec = recover_initial_datum(k, &p, Seed::TailCorrected, &cfg).unwrap();
            let t_err = (rec.t - transmission(c64(k, 0.0), &p).unwrap()).norm();
            let r_err = (rec.r - reflection(c64(k, 0.0), &p).unwrap()).norm();
            assert!(t_err <= rec.est_error, "k = {k}: {t_err:.3e} > {:.3e}", rec.est_error);
            assert!(r_err <= rec.est_error, "k = {k}: {r_err:.3e} > {:.3e}", rec.est_error);
            assert!(t_err < 2e-3 && r_err < 2e-3, "k = {k}");
        }
    }

    #[test]
    fn exact_seed_leaves_only_integrator_error() {
        let p = ResonanceParams::new(2.0).unwrap();
        let cfg = cfg_with_l(150.0);
        for k in [0.5, 2.0, 3.0] {
            let rec = recover_background(k, p.a(), Seed::ExactJost, &cfg).unwrap();
            let want = transmission_free(c64(k, 0.0), p.a());
            let err = (rec.t - want).norm();
            assert!(err < 1e-6, "k = {k}: {err:.3e}");
        }
    }

    #[test]
    fn recovered_pair_is_unitary() {
        let p = ResonanceParams::new(1.0).unwrap();
        let cfg = cfg_with_l(300.0);
        let rec = recover_initial_datum(1.7, &p, Seed::TailCorrected, &cfg).unwrap();
        let defect = (rec.t.norm_sqr() + rec.r.norm_sqr() - 1.0).abs();
        assert!(defect < 2.0 * rec.est_error, "defect {defect:.3e}");
    }

    #[test]
    fn tail_correction_beats_the_plane_seed() {
        let p = ResonanceParams::new(2.0).unwrap();
        let cfg = cfg_with_l(400.0);
        let k = 0.5;
        let want = transmission(c64(k, 0.0), &p).unwrap();
        let plane = (recover_initial_datum(k, &p, Seed::PlaneWave, &cfg).unwrap().t - want).norm();
        let corr =
            (recover_initial_datum(k, &p, Seed::TailCorrected, &cfg).unwrap().t - want).norm();
        assert!(
            corr < 0.5 * plane,
            "corrected {corr:.3e} not better than plane {plane:.3e}"
        );
    }

    #[test]
    fn plane_seed_error_stays_inside_the_truncation_envelope() {
        // The truncation error oscillates in L (interference of the
        // e^{±2iL} tail phases), so the pointwise ratio between two cutoffs
        // is not 4; what the 1/L law guarantees is the envelope.
        let p = ResonanceParams::new(2.0).unwrap();
        let k = 0.5;
        let want = transmission(c64(k, 0.0), &p).unwrap();
        let err_at = |l: f64| {
            let rec = recover_initial_datum(k, &p, Seed::PlaneWave, &cfg_with_l(l)).unwrap();
            let e = (rec.t - want).norm();
            assert!(e <= rec.est_error, "L = {l}: {e:.3e} > {:.3e}", rec.est_error);
            e
        };
        let (e1, e2) = (err_at(250.0), err_at(1000.0));
        assert!(e2 < e1, "no decay: e(250) = {e1:.3e}, e(1000) = {e2:.3e}");
    }

    #[test]
    fn wavenumber_preconditions_are_enforced() {
        let p = ResonanceParams::new(2.0).unwrap();
        let cfg = cfg_with_l(200.0);
        for bad in [0.1, -0.15, 0.98, 1.04, -1.01, f64::NAN] {
            assert!(
                recover_initial_datum(bad, &p, Seed::PlaneWave, &cfg).is_err(),
                "k = {bad} accepted"
            );
        }
    }

    #[test]
    fn exact_seed_is_background_only() {
        let p = ResonanceParams::new(2.0).unwrap();
        let r = recover_initial_datum(2.0, &p, Seed::ExactJost, &cfg_with_l(200.0));
        assert!(matches!(r, Err(CoreError::Config { .. })));
    }
}
