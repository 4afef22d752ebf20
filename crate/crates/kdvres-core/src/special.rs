// SPDX-License-Identifier: MIT OR Apache-2.0
//! Complex dilogarithm and log-gamma.
//!
//! `dilog` is the principal branch of `Li₂(z) = −∫₀^z log(1−s)/s ds`
//! with the cut along `[1, ∞)`.  The argument is first reduced into the
//! region `{|z| ≤ 1, Re z ≤ 1/2}` by the inversion and reflection
//! identities, where the Debye series in `w = −log(1−z)`,
//! `Li₂ = Σ_k B_k w^{k+1}/(k+1)!`, converges to machine precision by
//! `k = 22` (there `|w| ≤ 1.1`, so the tail is below `3e−18`).
//!
//! `ln_gamma` is the Lanczos approximation (`g = 7`, 9 terms) in the half
//! plane `Re z ≥ 1/2`, extended left by the *recurrence*
//! `logΓ(z) = logΓ(z+1) − Log z` rather than the reflection formula: the
//! recurrence keeps `Im logΓ` continuous along the imaginary axis, which
//! the phase extraction in the asymptotics module relies on
//! (`Im logΓ(10i) ≈ 12.23` exceeds `π`, so a wrapped `arg` would be wrong).

use crate::error::{CoreError, Result};
use crate::{c64, C64};
#[allow(unused_imports)] // inherent methods cover std; the trait backs no_std
use num_traits::Float;

const PI: f64 = core::f64::consts::PI;

/// `Li₂` on the reduced region `|z| ≤ 1`, `Re z ≤ 1/2`, via the Bernoulli
/// series in `w = −log(1−z)`.  Coefficients are `B_k/(k+1)!` as exact
/// rationals (odd `k ≥ 3` vanish).
fn dilog_series(z: C64) -> C64 {
    let w = -(1.0 - z).ln();
    let w2 = w * w;
    // k = 0, 1: w − w²/4.
    let mut sum = w * (1.0 - w * 0.25);
    let mut wp = w * w2; // w³
    for &c in &[
        1.0 / 36.0,                          // B₂/3!
        -1.0 / 3_600.0,                      // B₄/5!
        1.0 / 211_680.0,                     // B₆/7!
        -1.0 / 10_886_400.0,                 // B₈/9!
        1.0 / 526_901_760.0,                 // B₁₀/11!
        -691.0 / 16_999_766_784_000.0,       // B₁₂/13!
        1.0 / 1_120_863_744_000.0,           // B₁₄/15!
        -3617.0 / 181_400_588_328_960_000.0, // B₁₆/17!
        43_867.0 / (798.0 * 121_645_100_408_832_000.0), // B₁₈/19!
        -174_611.0 / (330.0 * 51_090_942_171_709_440_000.0), // B₂₀/21!
        854_513.0 / (138.0 * 25_852_016_738_884_976_640_000.0), // B₂₂/23!
    ] {
        sum += wp * c;
        wp *= w2;
    }
    sum
}

/// Principal-branch complex dilogarithm `Li₂(z)`, cut along `[1, ∞)`.
pub fn dilog(z: C64) -> C64 {
    if z.re == 0.0 && z.im == 0.0 {
        return c64(0.0, 0.0);
    }
    if z.im == 0.0 && z.re == 1.0 {
        return c64(PI * PI / 6.0, 0.0);
    }
    if z.norm_sqr() > 1.0 {
        // Li₂(z) = −Li₂(1/z) − π²/6 − log²(−z)/2.
        let lg = (-z).ln();
        return -dilog(1.0 / z) - PI * PI / 6.0 - 0.5 * lg * lg;
    }
    if z.re > 0.5 {
        // Li₂(z) = π²/6 − log z · log(1−z) − Li₂(1−z).
        return PI * PI / 6.0 - z.ln() * (1.0 - z).ln() - dilog_series(1.0 - z);
    }
    dilog_series(z)
}

/// Lanczos coefficients, `g = 7`, 9 terms.
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// `log Γ(z)` with `Im` continuous on paths staying off the left half
/// line — in particular along the positive imaginary axis, where the value
/// grows past `π` without wrapping.  Poles of `Γ` (`z = 0, −1, −2, …`) are
/// reported as [`CoreError::Pole`].
pub fn ln_gamma(z: C64) -> Result<C64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(CoreError::Domain {
            what: "ln_gamma argument must be finite",
        });
    }
    if z.re < 0.5 {
        if z.im == 0.0 && z.re == z.re.floor() {
            return Err(CoreError::Pole { re: z.re, im: z.im });
        }
        // logΓ(z) = logΓ(z+1) − Log z; at most a few steps for our uses.
        return Ok(ln_gamma(z + 1.0)? - z.ln());
    }
    let zz = z - 1.0;
    let mut acc = c64(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (zz + i as f64);
    }
    let t = zz + 7.5;
    let half_log_two_pi = 0.918_938_533_204_672_67;
    Ok(half_log_two_pi + (zz + 0.5) * t.ln() - t + acc.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: C64, b: C64, eps: f64) -> bool {
        (a - b).norm() <= eps
    }

    #[test]
    fn dilog_reference_values() {
        // Independently computed at 30-digit precision and frozen.
        let cases = [
            (c64(0.0, 1.0), c64(-0.2056167583560283, 0.91596559417721902)),
            (
                c64(0.3, 0.4),
                c64(0.26659686674274042, 0.46136289181910899),
            ),
            (
                c64(-5.0, 3.0),
                c64(-2.9097140353997029, 1.0351217939109976),
            ),
            (
                c64(3.0, 4.0),
                c64(-0.60480701206119998, 3.7336195322943859),
            ),
            (c64(0.5, 0.0), c64(0.5822405264650125, 0.0)),
        ];
        for (z, want) in cases {
            let got = dilog(z);
            assert!(
                close(got, want, 1e-14),
                "Li2({z}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn dilog_half_matches_its_closed_form() {
        let want = PI * PI / 12.0 - 0.5 * (2.0f64).ln().powi(2);
        assert!((dilog(c64(0.5, 0.0)).re - want).abs() < 1e-15);
    }

    #[test]
    fn dilog_special_points() {
        assert_eq!(dilog(c64(0.0, 0.0)), c64(0.0, 0.0));
        assert!((dilog(c64(1.0, 0.0)).re - PI * PI / 6.0).abs() < 1e-15);
        assert!((dilog(c64(-1.0, 0.0)).re + PI * PI / 12.0).abs() < 1e-14);
    }

    #[test]
    fn ln_gamma_reference_values() {
        let cases = [
            (c64(0.0, 1.0), c64(-0.65092319930185634, -1.8724366472624298)),
            (
                c64(0.5, 3.0),
                c64(-3.7934504504362232, 0.30981927108643917),
            ),
        ];
        for (z, want) in cases {
            let got = ln_gamma(z).unwrap();
            assert!(
                close(got, want, 5e-13),
                "lnGamma({z}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn ln_gamma_imaginary_axis_phase_is_unwrapped() {
        let g25 = ln_gamma(c64(0.0, 2.5)).unwrap();
        assert!((g25.im - -1.0281919209424601).abs() < 1e-12);
        // At 10i the phase exceeds π — a wrapped arg would return ≈ −0.33.
        let g10 = ln_gamma(c64(0.0, 10.0)).unwrap();
        assert!((g10.im - 12.232116647435004).abs() < 1e-11);
        // Stirling: Im logΓ(iy) ≈ y log y − y − π/4, deviation O(1/y).
        let stirling = 10.0 * (10.0f64).ln() - 10.0 - PI / 4.0;
        assert!((g10.im - stirling).abs() < 0.01);
    }

    #[test]
    fn ln_gamma_small_integers() {
        for (n, want) in [(1.0, 0.0), (2.0, 0.0), (5.0, 24.0f64.ln())] {
            let got = ln_gamma(c64(n, 0.0)).unwrap();
            assert!((got.re - want).abs() < 1e-13 && got.im.abs() < 1e-13);
        }
    }

    #[test]
    fn ln_gamma_rejects_poles() {
        for re in [0.0, -1.0, -2.0, -7.0] {
            assert!(matches!(
                ln_gamma(c64(re, 0.0)),
                Err(CoreError::Pole { .. })
            ));
        }
        assert!(ln_gamma(c64(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn gamma_of_i_modulus() {
        // |Γ(iy)|² = π/(y sinh πy).
        for y in [0.5, 1.0, 2.5] {
            let lg = ln_gamma(c64(0.0, y)).unwrap();
            let want = (PI / (y * (PI * y).sinh())).ln() * 0.5;
            assert!((lg.re - want).abs() < 1e-12, "y = {y}");
        }
    }

    proptest! {
        #[test]
        fn dilog_reflection_identity(re in -0.95f64..0.95, im in -0.95f64..0.95) {
            let z = c64(re, im);
            prop_assume!(z.norm() > 1e-3 && (z - 1.0).norm() > 1e-3);
            let lhs = dilog(z) + dilog(1.0 - z);
            let rhs = PI * PI / 6.0 - z.ln() * (1.0 - z).ln();
            prop_assert!(close(lhs, rhs, 1e-12));
        }

        #[test]
        fn dilog_conjugation(re in -3.0f64..0.9, im in 0.05f64..3.0) {
            let z = c64(re, im);
            prop_assert!(close(dilog(z.conj()), dilog(z).conj(), 1e-13));
        }

        #[test]
        fn gamma_recurrence(re in -3.0f64..3.0, im in 0.1f64..3.0) {
            let z = c64(re, im);
            // exp(logΓ(z+1) − logΓ(z)) = z even when Im logΓ differs by 2πn.
            let d = ln_gamma(z + 1.0).unwrap() - ln_gamma(z).unwrap();
            prop_assert!(close(d.exp(), z, 1e-10 * z.norm().max(1.0)));
        }
    }
}
