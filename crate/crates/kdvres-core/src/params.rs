// SPDX-License-Identifier: MIT OR Apache-2.0
//! The single physical parameter κ and its derived scattering constants.

use crate::error::{ensure_finite, CoreError, Result};
use crate::{c64, C64};
#[allow(unused_imports)] // inherent methods cover std; the trait backs no_std
use num_traits::Float;

/// All parameters of the potential family, derived from the single positive
/// number κ.
///
/// * `a = (κ³ + κ)/2` — the coupling in front of the oscillatory tail;
///   equivalently κ is the unique positive root of `κ³ + κ = 2a`.
/// * `ν = (1/π)·log a` — the resonance index, `ν = −(1/π)·log |T′(1)|`.
/// * `k± = ±√(1 + 3κ²/4) − iκ/2` — the two lower-half-plane poles shared by
///   the transmission and reflection coefficients.
///
/// The struct is constructed only from κ; the derived fields are computed
/// once so that inconsistent parameter triples cannot exist.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceParams {
    kappa: f64,
    a: f64,
    nu: f64,
    pole_plus: C64,
    pole_minus: C64,
}

impl ResonanceParams {
    /// Builds the parameter set from κ > 0.
    pub fn new(kappa: f64) -> Result<Self> {
        let kappa = ensure_finite(kappa, "kappa must be finite")?;
        if kappa <= 0.0 {
            return Err(CoreError::Domain {
                what: "kappa must be positive",
            });
        }
        let a = (kappa * kappa * kappa + kappa) / 2.0;
        let re = (1.0 + 0.75 * kappa * kappa).sqrt();
        Ok(Self {
            kappa,
            a,
            nu: a.ln() / core::f64::consts::PI,
            pole_plus: c64(re, -kappa / 2.0),
            pole_minus: c64(-re, -kappa / 2.0),
        })
    }

    /// The defining parameter κ.
    #[inline]
    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// The coupling `a = (κ³ + κ)/2`.
    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    /// The resonance index `ν = (1/π)·log a` (negative for `a < 1`).
    #[inline]
    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// The right pole `k₊ = √(1 + 3κ²/4) − iκ/2`.
    #[inline]
    pub fn pole_plus(&self) -> C64 {
        self.pole_plus
    }

    /// The left pole `k₋ = −√(1 + 3κ²/4) − iκ/2`.
    #[inline]
    pub fn pole_minus(&self) -> C64 {
        self.pole_minus
    }

    /// `iκ` as a complex number (the pole of `T` in the upper half-plane of
    /// the *free* family, and the Darboux spectral point).
    #[inline]
    pub fn i_kappa(&self) -> C64 {
        c64(0.0, self.kappa)
    }
}

/// Coupling from κ: `a = (κ³ + κ)/2`, the unique value for which κ solves
/// `κ³ + κ = 2a`.
pub fn coupling_from_kappa(kappa: f64) -> Result<f64> {
    let kappa = ensure_finite(kappa, "kappa must be finite")?;
    if kappa <= 0.0 {
        return Err(CoreError::Domain {
            what: "kappa must be positive",
        });
    }
    Ok((kappa * kappa * kappa + kappa) / 2.0)
}

/// Inverse of [`coupling_from_kappa`]: the unique positive root of
/// `κ³ + κ − 2a = 0`, found by bisection on the strictly monotone cubic.
pub fn kappa_from_coupling(a: f64) -> Result<f64> {
    let a = ensure_finite(a, "a must be finite")?;
    if a <= 0.0 {
        return Err(CoreError::Domain {
            what: "a must be positive",
        });
    }
    let f = |k: f64| k * k * k + k - 2.0 * a;
    let mut lo = 0.0_f64;
    let mut hi = 1.0_f64.max(2.0 * a); // f(hi) ≥ hi − 2a ≥ 0 for hi ≥ 2a, hi ≥ 1
    while f(hi) < 0.0 {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn kappa_two_gives_a_five() {
        let p = ResonanceParams::new(2.0).unwrap();
        assert_eq!(p.a(), 5.0);
        assert_eq!(coupling_from_kappa(2.0).unwrap(), 5.0);
    }

    #[test]
    fn kappa_one_gives_a_one() {
        assert_eq!(coupling_from_kappa(1.0).unwrap(), 1.0);
    }

    #[test]
    fn cubic_root_inverts_coupling() {
        let k = kappa_from_coupling(5.0).unwrap();
        assert!((k - 2.0).abs() < 1e-12, "kappa = {k}");
        for kappa in [0.1, 0.5, 1.0, 2.0, 3.0, 7.5] {
            let a = coupling_from_kappa(kappa).unwrap();
            assert_relative_eq!(kappa_from_coupling(a).unwrap(), kappa, epsilon = 1e-12);
        }
    }

    #[test]
    fn derived_fields_satisfy_their_identities() {
        for kappa in [0.5, 1.0, 2.0, 3.0] {
            let p = ResonanceParams::new(kappa).unwrap();
            // κ³ + κ − 2a = 0 exactly (machine precision)
            assert!((kappa.powi(3) + kappa - 2.0 * p.a()).abs() < 1e-14);
            // pole symmetry: Re k₊ = −Re k₋, Im k₊ = Im k₋ = −κ/2
            assert_eq!(p.pole_plus().re, -p.pole_minus().re);
            assert_eq!(p.pole_plus().im, -kappa / 2.0);
            assert_eq!(p.pole_minus().im, -kappa / 2.0);
            // ν is real and equals log(a)/π
            assert_relative_eq!(p.nu(), p.a().ln() / core::f64::consts::PI);
        }
    }

    #[test]
    fn rejects_bad_kappa() {
        assert!(ResonanceParams::new(0.0).is_err());
        assert!(ResonanceParams::new(-1.0).is_err());
        assert!(ResonanceParams::new(f64::NAN).is_err());
        assert!(ResonanceParams::new(f64::INFINITY).is_err());
        assert!(kappa_from_coupling(0.0).is_err());
    }
}
