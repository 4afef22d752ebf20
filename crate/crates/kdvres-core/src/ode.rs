// SPDX-License-Identifier: MIT OR Apache-2.0
//! Adaptive Dormand–Prince 5(4) integration of the stationary
//! Schrödinger equation `ψ″ = (q(x) − k²)ψ` as a first-order complex
//! system in `(ψ, ψ′)`.
//!
//! The embedded pair gives a per-step error estimate; steps are accepted
//! against a mixed absolute/relative tolerance and the step size follows
//! the standard fifth-root controller with a `[0.2, 5]` change clamp and
//! FSAL reuse of the last stage.

use crate::error::{CoreError, Result};
use crate::C64;
#[allow(unused_imports)] // inherent methods cover std; the trait backs no_std
use num_traits::Float;

/// Tolerances and budget for one integration; also carries the left
/// cutoff used by the scattering driver that owns the integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeSolveConfig {
    /// Distance `L` of the left matching point `x = −L` from the origin
    /// (used by the scattering recovery; must be ≥ 100).
    pub left_cutoff: f64,
    /// Relative tolerance, in `(0, 1e−3]`.
    pub rel_tol: f64,
    /// Absolute tolerance, in `(0, 1e−3]`.
    pub abs_tol: f64,
    /// Hard cap on accepted + rejected steps.
    pub max_steps: usize,
}

impl Default for OdeSolveConfig {
    fn default() -> Self {
        Self {
            left_cutoff: 2000.0,
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_steps: 2_000_000,
        }
    }
}

impl OdeSolveConfig {
    /// Check the documented field ranges.
    pub fn validate(&self) -> Result<()> {
        if !(self.left_cutoff >= 100.0) || !self.left_cutoff.is_finite() {
            return Err(CoreError::Config {
                what: "left_cutoff must be finite and at least 100",
            });
        }
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-3) {
            return Err(CoreError::Config {
                what: "rel_tol must lie in (0, 1e-3]",
            });
        }
        if !(self.abs_tol > 0.0 && self.abs_tol <= 1e-3) {
            return Err(CoreError::Config {
                what: "abs_tol must lie in (0, 1e-3]",
            });
        }
        if self.max_steps == 0 {
            return Err(CoreError::Config {
                what: "max_steps must be positive",
            });
        }
        Ok(())
    }
}

/// Two-component complex state `(ψ, ψ′)`.
type State = [C64; 2];

#[inline]
fn rhs<F: Fn(f64) -> f64>(q: &F, k2: C64, x: f64, y: &State) -> State {
    [y[1], (q(x) - k2) * y[0]]
}

#[inline]
fn axpy(y: &State, h: f64, coeffs: &[(f64, &State)]) -> State {
    let mut out = *y;
    for &(c, k) in coeffs {
        out[0] += h * c * k[0];
        out[1] += h * c * k[1];
    }
    out
}

/// Integrate `ψ″ = (q(x) − k²)ψ` from `x0` to `x1` (either direction)
/// with initial data `(psi0, dpsi0)` at `x0`; returns `(ψ, ψ′)` at `x1`.
pub fn integrate_schroedinger<F: Fn(f64) -> f64>(
    q: F,
    k: C64,
    x0: f64,
    x1: f64,
    psi0: C64,
    dpsi0: C64,
    cfg: &OdeSolveConfig,
) -> Result<(C64, C64)> {
    cfg.validate()?;
    if !x0.is_finite() || !x1.is_finite() {
        return Err(CoreError::Domain {
            what: "integration endpoints must be finite",
        });
    }
    if x0 == x1 {
        return Ok((psi0, dpsi0));
    }
    let k2 = k * k;
    let dir = (x1 - x0).signum();
    let span = (x1 - x0).abs();
    // Initial step: a fraction of the local oscillation length.
    let mut h = dir * (0.05 / (1.0 + k.norm())).min(span);
    let mut x = x0;
    let mut y: State = [psi0, dpsi0];
    let mut k1 = rhs(&q, k2, x, &y);
    let mut steps = 0usize;

    while (x1 - x) * dir > 0.0 {
        if steps >= cfg.max_steps {
            return Err(CoreError::Integration { steps });
        }
        steps += 1;
        if (x + h - x1) * dir > 0.0 {
            h = x1 - x;
        }

        // Dormand–Prince 5(4) stages.
        let y2 = axpy(&y, h, &[(0.2, &k1)]);
        let k2s = rhs(&q, k2, x + 0.2 * h, &y2);
        let y3 = axpy(&y, h, &[(3.0 / 40.0, &k1), (9.0 / 40.0, &k2s)]);
        let k3 = rhs(&q, k2, x + 0.3 * h, &y3);
        let y4 = axpy(
            &y,
            h,
            &[(44.0 / 45.0, &k1), (-56.0 / 15.0, &k2s), (32.0 / 9.0, &k3)],
        );
        let k4 = rhs(&q, k2, x + 0.8 * h, &y4);
        let y5 = axpy(
            &y,
            h,
            &[
                (19372.0 / 6561.0, &k1),
                (-25360.0 / 2187.0, &k2s),
                (64448.0 / 6561.0, &k3),
                (-212.0 / 729.0, &k4),
            ],
        );
        let k5 = rhs(&q, k2, x + 8.0 / 9.0 * h, &y5);
        let y6 = axpy(
            &y,
            h,
            &[
                (9017.0 / 3168.0, &k1),
                (-355.0 / 33.0, &k2s),
                (46732.0 / 5247.0, &k3),
                (49.0 / 176.0, &k4),
                (-5103.0 / 18656.0, &k5),
            ],
        );
        let k6 = rhs(&q, k2, x + h, &y6);
        // Fifth-order solution (b-row equals the a7 row: FSAL).
        let y_new = axpy(
            &y,
            h,
            &[
                (35.0 / 384.0, &k1),
                (500.0 / 1113.0, &k3),
                (125.0 / 192.0, &k4),
                (-2187.0 / 6784.0, &k5),
                (11.0 / 84.0, &k6),
            ],
        );
        let k7 = rhs(&q, k2, x + h, &y_new);
        // Embedded fourth-order solution.
        let y_hat = axpy(
            &y,
            h,
            &[
                (5179.0 / 57600.0, &k1),
                (7571.0 / 16695.0, &k3),
                (393.0 / 640.0, &k4),
                (-92097.0 / 339200.0, &k5),
                (187.0 / 2100.0, &k6),
                (1.0 / 40.0, &k7),
            ],
        );

        let mut err = 0.0f64;
        for i in 0..2 {
            let scale = cfg.abs_tol + cfg.rel_tol * y[i].norm().max(y_new[i].norm());
            err = err.max((y_new[i] - y_hat[i]).norm() / scale);
        }
        if !err.is_finite() {
            return Err(CoreError::Domain {
                what: "state became non-finite during integration",
            });
        }

        if err <= 1.0 {
            x += h;
            y = y_new;
            k1 = k7;
        }
        let factor = if err == 0.0 {
            5.0
        } else {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        };
        h *= factor;
    }
    Ok((y[0], y[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jost::jost_q0;
    use crate::potential::q0;
    use crate::{c64, I};

    fn cfg() -> OdeSolveConfig {
        OdeSolveConfig::default()
    }

    #[test]
    fn free_wave_propagates_exactly() {
        let k = c64(1.3, 0.0);
        let x0 = -20.0;
        let seed = (-I * k * x0).exp();
        let (psi, dpsi) =
            integrate_schroedinger(|_| 0.0, k, x0, 0.0, seed, -I * k * seed, &cfg()).unwrap();
        assert!((psi - 1.0).norm() < 1e-9, "psi(0) = {psi}");
        assert!((dpsi - -I * k).norm() < 1e-9);
    }

    #[test]
    fn backward_integration_reverses_the_forward_pass() {
        let k = c64(0.7, 0.0);
        let a = 5.0;
        let (psi, dpsi) = integrate_schroedinger(
            |x| q0(x, a).unwrap(),
            k,
            -30.0,
            0.0,
            c64(1.0, 0.0),
            c64(0.0, 0.5),
            &cfg(),
        )
        .unwrap();
        let (back, dback) =
            integrate_schroedinger(|x| q0(x, a).unwrap(), k, 0.0, -30.0, psi, dpsi, &cfg())
                .unwrap();
        assert!((back - 1.0).norm() < 1e-8);
        assert!((dback - c64(0.0, 0.5)).norm() < 1e-8);
    }

    #[test]
    fn reproduces_the_closed_form_solution() {
        let a = 5.0;
        let k = c64(2.0, 0.0);
        let start = jost_q0(-50.0, k, a).unwrap();
        let (psi, dpsi) = integrate_schroedinger(
            |x| q0(x, a).unwrap(),
            k,
            -50.0,
            0.0,
            start.psi,
            start.psi_x,
            &cfg(),
        )
        .unwrap();
        let end = jost_q0(0.0, k, a).unwrap();
        assert!((psi - end.psi).norm() < 1e-6, "drift {:.3e}", (psi - end.psi).norm());
        assert!((dpsi - end.psi_x).norm() < 1e-6);
    }

    #[test]
    fn wronskian_of_two_solutions_is_conserved() {
        let a = 2.0;
        let k = c64(1.5, 0.0);
        let run = |p0: C64, d0: C64| {
            integrate_schroedinger(|x| q0(x, a).unwrap(), k, -30.0, 0.0, p0, d0, &cfg()).unwrap()
        };
        let (ya, da) = run(c64(1.0, 0.0), c64(0.0, 0.0));
        let (yb, db) = run(c64(0.0, 0.0), c64(1.0, 0.0));
        let w = ya * db - da * yb;
        assert!((w - 1.0).norm() < 1e-9, "W = {w}");
    }

    #[test]
    fn tighter_tolerance_means_smaller_error() {
        let a = 5.0;
        let k = c64(2.0, 0.0);
        let start = jost_q0(-50.0, k, a).unwrap();
        let err_at = |rel: f64| -> f64 {
            let mut c = cfg();
            c.rel_tol = rel;
            c.abs_tol = rel * 1e-2;
            let (psi, _) = integrate_schroedinger(
                |x| q0(x, a).unwrap(),
                k,
                -50.0,
                0.0,
                start.psi,
                start.psi_x,
                &c,
            )
            .unwrap();
            (psi - jost_q0(0.0, k, a).unwrap().psi).norm()
        };
        let coarse = err_at(1e-5);
        let fine = err_at(1e-10);
        assert!(fine < coarse * 1e-2, "coarse {coarse:.3e}, fine {fine:.3e}");
    }

    #[test]
    fn step_budget_is_enforced() {
        let mut c = cfg();
        c.max_steps = 10;
        let r = integrate_schroedinger(
            |_| 0.0,
            c64(5.0, 0.0),
            -1000.0,
            0.0,
            c64(1.0, 0.0),
            c64(0.0, 0.0),
            &c,
        );
        assert!(matches!(r, Err(CoreError::Integration { .. })));
    }

    #[test]
    fn config_ranges_are_enforced() {
        let mut c = cfg();
        c.left_cutoff = 50.0;
        assert!(c.validate().is_err());
        let mut c = cfg();
        c.rel_tol = 0.0;
        assert!(c.validate().is_err());
        let mut c = cfg();
        c.abs_tol = 1.0;
        assert!(c.validate().is_err());
        let mut c = cfg();
        c.max_steps = 0;
        assert!(c.validate().is_err());
        assert!(cfg().validate().is_ok());
    }

    #[test]
    fn zero_span_returns_the_seed() {
        let (p, d) = integrate_schroedinger(
            |_| 0.0,
            c64(1.0, 0.0),
            -5.0,
            -5.0,
            c64(0.25, 0.5),
            c64(-1.0, 0.0),
            &cfg(),
        )
        .unwrap();
        assert_eq!(p, c64(0.25, 0.5));
        assert_eq!(d, c64(-1.0, 0.0));
    }
}
