// SPDX-License-Identifier: MIT OR Apache-2.0
//! The verification suites behind `check-all`, `verify-scatter`, and
//! `verify-rhp`, shared with the acceptance tests.
//!
//! Each suite measures a worst-case deviation over a point set and
//! reports it against a pinned tolerance as a [`SuiteReport`] row; a
//! suite passes when `max_err <= tolerance`.  Tolerances follow from the
//! construction of each check (closed-form oracles, a-priori truncation
//! estimates, scheme order), not from tuning: see the individual suites.

use anyhow::{bail, Result};
use kdvres_core::asym::{amplitude, beta, nu_of_t, phase_shift, q_alt, q_asym, stirling_gap};
use kdvres_core::direct::{recover_background, recover_initial_datum, Seed};
use kdvres_core::jost::darboux_q;
use kdvres_core::ode::OdeSolveConfig;
use kdvres_core::partial::{
    boundary_values, factor_a0, factor_regular, factor_singular, factor_singular_by_quadrature,
    partial_transmission, partial_transmission_direct, transmission_model_near_one,
};
use kdvres_core::potential::q;
use kdvres_core::quad::{integrate, QuadratureSpec};
use kdvres_core::rhp::{
    cross_entry_exact, cross_entry_model, factorization_residual, jump_matrix, scaled_k, CrossRay,
    RESONANCE_RAY_SLOPE,
};
use kdvres_core::scattering::{reflection, reflection_free, transmission, transmission_free};
use kdvres_core::{c64, ResonanceParams};
use kdvres_sim::field::prepare_initial;
use kdvres_sim::ray::sample_along_ray;
use kdvres_sim::{run, run_linear, SimConfig, SimOutcome, WaveField};
use serde::Serialize;
use std::f64::consts::PI;

use crate::grid::SeededPoints;

/// One row of the verification table.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    /// Suite name (stable identifier, also used in JSON reports).
    pub name: String,
    /// Number of sample points behind `max_err`.
    pub points: usize,
    /// Worst observed deviation.
    pub max_err: f64,
    /// Pinned tolerance the deviation is held against.
    pub tolerance: f64,
}

impl SuiteReport {
    fn new(name: &str, points: usize, max_err: f64, tolerance: f64) -> Self {
        SuiteReport {
            name: name.to_string(),
            points,
            max_err,
            tolerance,
        }
    }

    /// Whether the suite passed (non-finite deviations fail).
    pub fn pass(&self) -> bool {
        self.max_err.is_finite() && self.max_err <= self.tolerance
    }
}

/// Prints the aggregate table: `(name, points, max_err, tolerance, pass)`.
pub fn print_table(rows: &[SuiteReport]) {
    println!(
        "{:<28} {:>7} {:>13} {:>13}  {}",
        "suite", "points", "max_err", "tolerance", "pass"
    );
    for r in rows {
        println!(
            "{:<28} {:>7} {:>13.3e} {:>13.3e}  {}",
            r.name,
            r.points,
            r.max_err,
            r.tolerance,
            if r.pass() { "yes" } else { "NO" }
        );
    }
}

/// Whether every row passed.
pub fn all_pass(rows: &[SuiteReport]) -> bool {
    rows.iter().all(SuiteReport::pass)
}

/// Replaces every tolerance by `tol` when given (`--tol` override).
pub fn override_tolerances(rows: &mut [SuiteReport], tol: Option<f64>) {
    if let Some(tol) = tol {
        for r in rows {
            r.tolerance = tol;
        }
    }
}

fn max_update(worst: &mut f64, err: f64) {
    if !(err <= *worst) {
        *worst = err;
    }
}

// ---------------------------------------------------------------------
// Scattering: ODE recovery against the closed forms (criterion 1).
// ---------------------------------------------------------------------

/// Recovers `(T, R)` of the initial datum by ODE integration from a
/// tail-corrected seed at `x = −L` and of the background potential from
/// the exact Jost seed, and compares both against the closed forms.  The
/// tolerances are the a-priori truncation estimates rounded outward:
/// `1e−3` for the `O(1/L)` corrected seed at `L = 2000`, `1e−5` for the
/// exact seed (ODE tolerance only).
pub fn scattering_recovery(kappas: &[f64], ks: &[f64], length: f64) -> Result<Vec<SuiteReport>> {
    let cfg = OdeSolveConfig {
        left_cutoff: length,
        ..OdeSolveConfig::default()
    };
    let mut worst_datum = 0.0f64;
    let mut worst_background = 0.0f64;
    for &kappa in kappas {
        let p = ResonanceParams::new(kappa)?;
        for &k in ks {
            let kc = c64(k, 0.0);
            let rec = recover_initial_datum(k, &p, Seed::TailCorrected, &cfg)?;
            max_update(&mut worst_datum, (rec.t - transmission(kc, &p)?).norm());
            max_update(&mut worst_datum, (rec.r - reflection(kc, &p)?).norm());
            let bg = recover_background(k, p.a(), Seed::ExactJost, &cfg)?;
            max_update(
                &mut worst_background,
                (bg.t - transmission_free(kc, p.a())).norm(),
            );
            max_update(
                &mut worst_background,
                (bg.r - reflection_free(kc, p.a())).norm(),
            );
        }
    }
    let n = kappas.len() * ks.len();
    Ok(vec![
        SuiteReport::new("scattering-ode-datum", n, worst_datum, 1e-3),
        SuiteReport::new("scattering-ode-exact-seed", n, worst_background, 1e-5),
    ])
}

// ---------------------------------------------------------------------
// Darboux identity (criterion 2).
// ---------------------------------------------------------------------

/// `|darboux_q(x) − q(x)|` on `points` samples of `[−50, 0)` per κ: the
/// dressed potential rebuilt from the Jost solution must reproduce the
/// closed form to near machine precision (tolerance `1e−8` covers the
/// second-derivative cancellation in the Darboux quotient).
pub fn darboux_identity(kappas: &[f64], points: usize) -> Result<SuiteReport> {
    let mut worst = 0.0f64;
    for &kappa in kappas {
        let p = ResonanceParams::new(kappa)?;
        for j in 0..points {
            let x = -50.0 + 50.0 * j as f64 / points as f64; // [−50, 0)
            let err = (darboux_q(x, &p)? - q(x, &p)?).abs();
            max_update(&mut worst, err);
        }
    }
    Ok(SuiteReport::new(
        "darboux-identity",
        kappas.len() * points,
        worst,
        1e-8,
    ))
}

// ---------------------------------------------------------------------
// Scattering identities (criterion 3).
// ---------------------------------------------------------------------

/// Unitarity `|T|² + |R|² = 1` and the left/right coefficient identity
/// `−(T/conj T)·conj R = R` on seeded random real wavenumbers, for both
/// the datum and the background closed forms.  Pure algebra: tolerance
/// `1e−12` (roundoff headroom only).
pub fn scattering_identities(kappa: f64, points: usize, seed: u64) -> Result<Vec<SuiteReport>> {
    let p = ResonanceParams::new(kappa)?;
    let mut draw = SeededPoints::new(seed);
    let mut worst_unitarity = 0.0f64;
    let mut worst_left_right = 0.0f64;
    let mut worst_background = 0.0f64;
    for _ in 0..points {
        // The identity ratio T/conj T needs T ≠ 0: stay off k ∈ {0, ±1}.
        let k = loop {
            let k = draw.range(-4.0, 4.0);
            if k.abs() > 1e-3 && (k.abs() - 1.0).abs() > 1e-3 {
                break k;
            }
        };
        let kc = c64(k, 0.0);
        let t = transmission(kc, &p)?;
        let r = reflection(kc, &p)?;
        max_update(
            &mut worst_unitarity,
            (t.norm_sqr() + r.norm_sqr() - 1.0).abs(),
        );
        max_update(
            &mut worst_left_right,
            (-(t / t.conj()) * r.conj() - r).norm(),
        );
        let t0 = transmission_free(kc, p.a());
        let r0 = reflection_free(kc, p.a());
        max_update(
            &mut worst_background,
            (t0.norm_sqr() + r0.norm_sqr() - 1.0).abs(),
        );
    }
    Ok(vec![
        SuiteReport::new("unitarity", points, worst_unitarity, 1e-12),
        SuiteReport::new("left-equals-right", points, worst_left_right, 1e-12),
        SuiteReport::new("background-unitarity", points, worst_background, 1e-12),
    ])
}

// ---------------------------------------------------------------------
// Partial-transmission laws (criterion 4).
// ---------------------------------------------------------------------

/// The dilogarithm value `∫₀¹ log s/(s−2) ds = π²/12 − log²2/2` used as
/// the quadrature oracle.
pub const DILOG_HALF: f64 = PI * PI / 12.0 - 0.5 * core::f64::consts::LN_2 * core::f64::consts::LN_2;

/// Jump law, inversion/conjugation symmetries, regular×singular
/// factorization, unimodularity of the edge constant `A₀`, and the
/// dilogarithm quadrature oracle.
pub fn partial_transmission_laws(
    kappa: f64,
    jump_points: usize,
    seed: u64,
) -> Result<Vec<SuiteReport>> {
    let p = ResonanceParams::new(kappa)?;
    let spec = QuadratureSpec::default();
    let mut rows = Vec::new();

    // Jump law T₀₊/T₀₋ = 1 − |R|² on an interior grid (avoids 0, ±1).
    let mut worst = 0.0f64;
    for j in 0..jump_points {
        let k = -1.0 + 2.0 * (j as f64 + 0.5) / jump_points as f64;
        if k.abs() < 0.02 {
            continue;
        }
        let b = boundary_values(k, &p, &spec)?;
        let r = reflection(c64(k, 0.0), &p)?;
        max_update(&mut worst, (b.plus / b.minus - (1.0 - r.norm_sqr())).norm());
    }
    rows.push(SuiteReport::new("jump-law", jump_points, worst, 1e-8));

    // Inversion T₀(k)T₀(−k) = 1 and conjugation T₀(k̄)·conj T₀(k) = 1 on
    // seeded off-band points.
    let mut draw = SeededPoints::new(seed);
    let mut worst_inv = 0.0f64;
    let mut worst_conj = 0.0f64;
    let sym_points = 20;
    for _ in 0..sym_points {
        let re = draw.range(-2.5, 2.5);
        let im = draw.range(0.1, 2.1) * if draw.unit() < 0.5 { -1.0 } else { 1.0 };
        let k = c64(re, im);
        let t0 = partial_transmission(k, &p, &spec)?.value;
        let t0_neg = partial_transmission(-k, &p, &spec)?.value;
        let t0_conj = partial_transmission(k.conj(), &p, &spec)?.value;
        max_update(&mut worst_inv, (t0 * t0_neg - 1.0).norm());
        max_update(&mut worst_conj, (t0_conj * t0.conj() - 1.0).norm());
    }
    rows.push(SuiteReport::new(
        "inversion-symmetry",
        sym_points,
        worst_inv,
        1e-10,
    ));
    rows.push(SuiteReport::new(
        "conjugation-symmetry",
        sym_points,
        worst_conj,
        1e-10,
    ));

    // Regular × singular factorization against the structurally
    // independent direct Cauchy route.
    let fact_points = [c64(0.0, 2.0), c64(0.0, -2.0), c64(1.7, 0.8), c64(-0.4, -1.2)];
    let mut worst_fact = 0.0f64;
    for &k in &fact_points {
        let reg = factor_regular(k, &p, &spec)?.value;
        let sng = factor_singular(k, &p)?;
        let direct = partial_transmission_direct(k, &p, &spec)?.value;
        max_update(&mut worst_fact, (reg * sng - direct).norm());
    }
    rows.push(SuiteReport::new(
        "factorization",
        fact_points.len(),
        worst_fact,
        1e-8,
    ));

    // Singular factor: dilogarithm closed form vs endpoint-aware
    // quadrature (branch-handling certificate); 0.6 + 0.01i exercises
    // the near-band panel split.
    let sng_points = [
        c64(0.0, 2.0),
        c64(3.0, 0.5),
        c64(0.5, 0.7),
        c64(-2.5, 0.1),
        c64(0.6, 0.01),
    ];
    let mut worst_sng = 0.0f64;
    for &k in &sng_points {
        let closed = factor_singular(k, &p)?;
        let quad = factor_singular_by_quadrature(k, &p, &spec)?.value;
        max_update(&mut worst_sng, (closed - quad).norm() / closed.norm().max(1.0));
    }
    rows.push(SuiteReport::new(
        "singular-factor-routes",
        sng_points.len(),
        worst_sng,
        1e-10,
    ));

    // |A₀| = 1 (the bracket in its exponent is real).
    let a0 = factor_a0(&p, &spec)?;
    rows.push(SuiteReport::new(
        "edge-constant-modulus",
        1,
        (a0.norm() - 1.0).abs(),
        1e-10,
    ));

    // Quadrature oracle with a closed-form value.
    let dilog_quad = integrate(&spec, 0.0, 1.0, |x, dl, _dr| c64(dl.ln() / (x - 2.0), 0.0))?;
    rows.push(SuiteReport::new(
        "dilog-oracle",
        1,
        (dilog_quad.value.re - DILOG_HALF).abs(),
        1e-10,
    ));
    Ok(rows)
}

// ---------------------------------------------------------------------
// Band-edge model of T₀ (criterion 5).
// ---------------------------------------------------------------------

/// Relative error of the band-edge model
/// `A₀·exp{iν·Log(k−1) + Log²(k−1)/(2πi)}` at `k = 1 + ε e^{iπ/4}`: must
/// decrease monotonically over ε ∈ {1e−2, 1e−3, 1e−4} and be below 5e−2
/// at the smallest ε (the expansion drops O(ε log ε) terms, so this is a
/// slow approach — hence the loose final tolerance).
pub fn edge_model(kappa: f64) -> Result<Vec<SuiteReport>> {
    let p = ResonanceParams::new(kappa)?;
    let spec = QuadratureSpec::default();
    let a0 = factor_a0(&p, &spec)?;
    let dir = c64((PI / 4.0).cos(), (PI / 4.0).sin());
    let mut errs = Vec::new();
    for &eps in &[1e-2, 1e-3, 1e-4] {
        let k = 1.0 + eps * dir;
        let t0 = partial_transmission(k, &p, &spec)?.value;
        let model = transmission_model_near_one(k, a0, p.nu());
        errs.push(((t0 - model) / t0).norm());
    }
    let worst_ratio = (errs[1] / errs[0]).max(errs[2] / errs[1]);
    Ok(vec![
        SuiteReport::new("edge-model-error", 1, errs[2], 5e-2),
        SuiteReport::new("edge-model-monotone", errs.len(), worst_ratio, 1.0),
    ])
}

// ---------------------------------------------------------------------
// Riemann-Hilbert algebra (criterion 6).
// ---------------------------------------------------------------------

/// Triangular factorization residual `B₋⁻¹B₊ = T₀₋^{σ₃} V T₀₊^{−σ₃}` on
/// seeded `(k, t)` pairs, `det V = 1`, and the decay slope of the local
/// parametrix error over `t ∈ {10², 10³, 10⁴}` (theory: `t^{−1/2}`, so
/// slope `−0.5 ± 0.15` on a log-log fit).
pub fn rhp_algebra(kappa: f64, seed: u64) -> Result<Vec<SuiteReport>> {
    let p = ResonanceParams::new(kappa)?;
    let spec = QuadratureSpec::default();
    let mut rows = Vec::new();

    let mut draw = SeededPoints::new(seed);
    let fact_points = 40;
    let mut worst = 0.0f64;
    for _ in 0..fact_points {
        // Stay clear of the density singularities k ∈ {0, ±1} where the
        // boundary values themselves are refused.
        let k = loop {
            let k = draw.range(-2.5, 2.5);
            if k.abs() > 0.1 && (k.abs() - 1.0).abs() > 0.05 {
                break k;
            }
        };
        let t = draw.range(0.5, 5.0);
        max_update(
            &mut worst,
            factorization_residual(k, t, RESONANCE_RAY_SLOPE, &p, &spec)?,
        );
    }
    rows.push(SuiteReport::new(
        "rhp-factorization",
        fact_points,
        worst,
        1e-8,
    ));

    let det_points = 1000;
    let mut worst_det = 0.0f64;
    for _ in 0..det_points {
        let k = draw.range(-3.0, 3.0);
        let t = draw.range(0.1, 10.0);
        let v = jump_matrix(k, t, RESONANCE_RAY_SLOPE, &p)?;
        max_update(&mut worst_det, (v.det() - 1.0).norm());
    }
    rows.push(SuiteReport::new("jump-determinant", det_points, worst_det, 1e-12));

    // Parametrix error: worst relative entry error over the four cross
    // rays at |z| = 1, fitted against t on log-log axes.
    let times = [1e2, 1e3, 1e4];
    let a0 = factor_a0(&p, &spec)?;
    let mut ln_t = Vec::new();
    let mut ln_err = Vec::new();
    for &t in &times {
        let mut worst_entry = 0.0f64;
        for ray in CrossRay::ALL {
            let th = ray.angle();
            let z = c64(th.cos(), th.sin());
            let k = scaled_k(z, t);
            let t0 = partial_transmission(k, &p, &spec)?.value;
            let exact = cross_entry_exact(ray, z, t, &p, t0)?;
            let model = cross_entry_model(ray, z, t, &p, a0)?;
            max_update(&mut worst_entry, (exact / model - 1.0).norm());
        }
        ln_t.push(t.ln());
        ln_err.push(worst_entry.ln());
    }
    let slope = least_squares_slope(&ln_t, &ln_err);
    rows.push(SuiteReport::new(
        "parametrix-slope",
        times.len(),
        (slope + 0.5).abs(),
        0.15,
    ));
    Ok(rows)
}

fn least_squares_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

// ---------------------------------------------------------------------
// Long-time asymptotics internals (criterion 7).
// ---------------------------------------------------------------------

/// `|β(t)|² = ν(t)`, agreement of the sine-form and β-form evaluation
/// routes within the measured Stirling gap at `t = 10⁴`, and the decay
/// law `amplitude²·(3t/4) = ν(t)` down to the regime edge.
pub fn asymptotic_internals(kappa: f64) -> Result<Vec<SuiteReport>> {
    let p = ResonanceParams::new(kappa)?;
    let spec = QuadratureSpec::default();
    let a0 = factor_a0(&p, &spec)?;
    let delta = phase_shift(&p, &spec)?;
    let mut rows = Vec::new();

    let times = [1.0, 1e2, 1e4];
    let mut worst = 0.0f64;
    for &t in &times {
        let b = beta(t, &p, a0)?;
        max_update(&mut worst, (b.norm_sqr() - nu_of_t(t, &p)?).abs());
    }
    rows.push(SuiteReport::new("beta-modulus", times.len(), worst, 1e-10));

    let t = 1e4;
    let nu = nu_of_t(t, &p)?;
    let gap_bound = amplitude(t, &p)? * stirling_gap(nu)?;
    let diff = (q_asym(t, &p, delta)? - q_alt(t, &p, a0)?).abs();
    rows.push(SuiteReport::new("two-route-gap", 1, diff, gap_bound));

    let t_edge = 1.0 / (48.0 * p.a() * p.a());
    let mut worst_decay = 0.0f64;
    for &t in &[t_edge, 1.0, 1e2, 1e4] {
        let amp = amplitude(t, &p)?;
        max_update(&mut worst_decay, (amp * amp * 0.75 * t - nu_of_t(t, &p)?).abs());
    }
    rows.push(SuiteReport::new("decay-law", 4, worst_decay, 1e-12));
    Ok(rows)
}

// ---------------------------------------------------------------------
// Simulator validity (criterion 8).
// ---------------------------------------------------------------------

fn sech(x: f64) -> f64 {
    1.0 / x.cosh()
}

fn max_field_error(field: &WaveField, exact: impl Fn(f64) -> f64) -> f64 {
    field
        .values
        .iter()
        .enumerate()
        .map(|(j, &v)| (v - exact(field.x(j))).abs())
        .fold(0.0, f64::max)
}

/// Soliton transport error, the linear (Airy) limit, and invariant drift
/// over a `t_end = 5` soliton run.  Tolerances: `1e−6` on the traveling
/// wave (measured headroom ~10³ at this resolution), `1e−8` on the
/// small-amplitude limit, `1e−6` relative on the Hamiltonian, `1e−10` on
/// mass (conserved exactly by the scheme up to roundoff).
pub fn simulator_validity() -> Result<Vec<SuiteReport>> {
    let mut rows = Vec::new();

    // Traveling wave q = −2 sech²(x − 4t − x₀), c = 1.
    let soliton_cfg = SimConfig {
        domain_length: 80.0,
        n_points: 1 << 12,
        dt: 1e-4,
        t_end: 1.0,
        taper_width: 0.0,
        kappa: 2.0,
        snapshot_every: 0.0,
        x_right: 40.0,
        dealias_frac: 2.0 / 3.0,
        wrap_guard_frac: 0.5,
    };
    let initial = WaveField::from_fn(&soliton_cfg, |x| -2.0 * sech(x + 10.0).powi(2));
    let outcome = run(&initial, &soliton_cfg)?;
    let err = max_field_error(outcome.final_field(), |x| {
        -2.0 * sech(x + 10.0 - 4.0 * soliton_cfg.t_end).powi(2)
    });
    rows.push(SuiteReport::new(
        "soliton-error",
        soliton_cfg.n_points,
        err,
        1e-6,
    ));

    // Small-amplitude limit against the exact Airy propagator.
    let airy_cfg = SimConfig {
        domain_length: 200.0,
        n_points: 1 << 12,
        dt: 2e-4,
        t_end: 1.0,
        taper_width: 0.0,
        kappa: 2.0,
        snapshot_every: 0.0,
        x_right: 100.0,
        dealias_frac: 2.0 / 3.0,
        wrap_guard_frac: 0.5,
    };
    let small = WaveField::from_fn(&airy_cfg, |x| 1e-5 * (-x * x / 4.0).exp());
    let nonlinear = run(&small, &airy_cfg)?;
    let linear = run_linear(&small, airy_cfg.t_end);
    let airy_err = nonlinear
        .final_field()
        .values
        .iter()
        .zip(&linear.values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    rows.push(SuiteReport::new(
        "airy-linear-limit",
        airy_cfg.n_points,
        airy_err,
        1e-8,
    ));

    // Invariant drift over a long soliton run.
    let drift_cfg = SimConfig {
        domain_length: 160.0,
        n_points: 1 << 13,
        dt: 1e-4,
        t_end: 5.0,
        taper_width: 0.0,
        kappa: 2.0,
        snapshot_every: 0.0,
        x_right: 40.0,
        dealias_frac: 2.0 / 3.0,
        wrap_guard_frac: 0.5,
    };
    let soliton = WaveField::from_fn(&drift_cfg, |x| -2.0 * sech(x + 30.0).powi(2));
    let long = run(&soliton, &drift_cfg)?;
    let energy_drift = ((long.conserved_final.energy - long.conserved_initial.energy)
        / long.conserved_initial.energy)
        .abs();
    let mass_drift = (long.conserved_final.mass - long.conserved_initial.mass).abs();
    rows.push(SuiteReport::new("energy-drift", 1, energy_drift, 1e-6));
    rows.push(SuiteReport::new("mass-drift", 1, mass_drift, 1e-10));
    Ok(rows)
}

// ---------------------------------------------------------------------
// Exploratory ray comparison (criterion 9; never gates an exit code).
// ---------------------------------------------------------------------

/// One snapshot sampled on the ray `x = −12t`, next to the asymptotic
/// prediction.
#[derive(Debug, Clone)]
pub struct RayRow {
    /// Snapshot time.
    pub t: f64,
    /// Ray point `−12t`.
    pub x: f64,
    /// Simulated field at the ray point.
    pub q_num: f64,
    /// Asymptotic prediction at the same point.
    pub q_asym: f64,
    /// Local wavelength from zero-crossing spacings (when enough
    /// crossings lie in the window).
    pub wavelength: Option<f64>,
    /// `max |q|` over the sampling window.
    pub envelope: f64,
    /// Predicted envelope `√(4ν/3t)`.
    pub envelope_model: f64,
}

/// Samples every stored snapshot with `t ≥ t_min` inside the asymptotic
/// regime, stopping at the first wrap-around guard event (after it the
/// ray window is contaminated by re-entrant radiation).
pub fn ray_rows(
    outcome: &SimOutcome,
    p: &ResonanceParams,
    t_min: f64,
    half_width: f64,
    delta: f64,
) -> Result<Vec<RayRow>> {
    let cutoff = outcome
        .guard_log
        .first()
        .map(|g| g.t)
        .unwrap_or(f64::INFINITY);
    let t_edge = 1.0 / (48.0 * p.a() * p.a());
    let mut rows = Vec::new();
    for field in &outcome.snapshots {
        let t = field.t;
        if t < t_min - 1e-9 || t < t_edge || t >= cutoff {
            continue;
        }
        let s = sample_along_ray(field, half_width);
        rows.push(RayRow {
            t,
            x: s.x_center,
            q_num: s.q_center,
            q_asym: q_asym(t, p, delta)?,
            wavelength: s.wavelength,
            envelope: s.envelope,
            envelope_model: amplitude(t, p)?,
        });
    }
    Ok(rows)
}

/// Desk-scale simulation against the long-time prediction at κ = 2 over
/// `t ∈ [4, 8]`: local wavelength within 10% of π (the stationary-phase
/// wavenumber is 2) and envelope within a factor of 2 of `√(4ν/3t)`.
/// Minutes of runtime; exploratory — reported, never gating.
pub fn ray_comparison() -> Result<Vec<SuiteReport>> {
    let cfg = SimConfig {
        domain_length: 600.0,
        n_points: 1 << 15,
        dt: 1e-4,
        t_end: 8.0,
        taper_width: 50.0,
        kappa: 2.0,
        snapshot_every: 0.25,
        x_right: 50.0,
        dealias_frac: 2.0 / 3.0,
        // The datum's corner at x = 0 radiates a weak burst above any
        // band limit; it wraps around early at desk scale but stays ~1%
        // of the energy, far below what contaminates the ray window.
        wrap_guard_frac: 0.05,
    };
    let p = ResonanceParams::new(cfg.kappa)?;
    let spec = QuadratureSpec::default();
    let delta = phase_shift(&p, &spec)?;
    let initial = prepare_initial(&cfg)?;
    let outcome = run(&initial, &cfg)?;
    let rows = ray_rows(&outcome, &p, 4.0, 12.0, delta)?;
    if rows.is_empty() {
        bail!("no ray samples inside t in [4, 8] (guard tripped early?)");
    }
    let mut worst_wavelength = 0.0f64;
    let mut worst_envelope = 0.0f64;
    for r in &rows {
        let wl_err = r
            .wavelength
            .map(|w| (w / PI - 1.0).abs())
            .unwrap_or(f64::INFINITY);
        max_update(&mut worst_wavelength, wl_err);
        max_update(
            &mut worst_envelope,
            (r.envelope / r.envelope_model).log2().abs(),
        );
    }
    Ok(vec![
        SuiteReport::new("ray-wavelength", rows.len(), worst_wavelength, 0.10),
        SuiteReport::new("ray-envelope", rows.len(), worst_envelope, 1.0),
    ])
}

// ---------------------------------------------------------------------
// Aggregation.
// ---------------------------------------------------------------------

/// Every gating suite (criteria 1–8) in order, with the pinned parameter
/// sets; `kappa` feeds the single-parameter suites.
pub fn gating_suites(kappa: f64, seed: u64) -> Result<Vec<SuiteReport>> {
    let mut rows = Vec::new();
    rows.extend(scattering_recovery(
        &[0.5, 1.0, 2.0],
        &[0.3, 0.5, 2.0, 3.0],
        2000.0,
    )?);
    rows.push(darboux_identity(&[0.5, 1.0, 2.0, 3.0], 500)?);
    rows.extend(scattering_identities(kappa, 1000, seed)?);
    rows.extend(partial_transmission_laws(kappa, 50, seed)?);
    rows.extend(edge_model(kappa)?);
    rows.extend(rhp_algebra(kappa, seed)?);
    rows.extend(asymptotic_internals(kappa)?);
    rows.extend(simulator_validity()?);
    Ok(rows)
}
