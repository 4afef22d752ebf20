// SPDX-License-Identifier: MIT OR Apache-2.0
//! The acceptance gate: one test per numbered criterion, each printing a
//! single `criterion N (label): PASS/FAIL in X s` line plus the suite
//! rows behind it.  Criteria 1–8 assert; criterion 9 is exploratory and
//! is reported without gating.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! table.

use std::time::Instant;

use kdvres_cli::suites::{self, SuiteReport};

/// Pretty-prints one criterion verdict and asserts rows + runtime.
fn report(number: u32, label: &str, rows: &[SuiteReport], elapsed_s: f64, budget_s: f64) {
    let passed = suites::all_pass(rows);
    println!(
        "criterion {number} ({label}): {} in {elapsed_s:.2} s",
        if passed { "PASS" } else { "FAIL" }
    );
    for r in rows {
        println!(
            "  {:<28} points {:>6}  max_err {:>12.3e}  tolerance {:>12.3e}  {}",
            r.name,
            r.points,
            r.max_err,
            r.tolerance,
            if r.pass() { "pass" } else { "FAIL" }
        );
    }
    for r in rows {
        assert!(
            r.pass(),
            "criterion {number} ({label}): suite {} max_err {:.3e} exceeds tolerance {:.3e}",
            r.name,
            r.max_err,
            r.tolerance
        );
    }
    assert!(
        elapsed_s < budget_s,
        "criterion {number} ({label}): runtime {elapsed_s:.1} s exceeds budget {budget_s} s"
    );
}

#[test]
fn a1_ode_scattering_recovery_matches_closed_forms() {
    let start = Instant::now();
    let rows = suites::scattering_recovery(&[0.5, 1.0, 2.0], &[0.3, 0.5, 2.0, 3.0], 2000.0)
        .expect("suite ran");
    report(
        1,
        "ODE-recovered T, R vs closed forms",
        &rows,
        start.elapsed().as_secs_f64(),
        30.0,
    );
}

#[test]
fn a2_darboux_dressing_reproduces_the_datum() {
    let start = Instant::now();
    let rows = [suites::darboux_identity(&[0.5, 1.0, 2.0, 3.0], 500).expect("suite ran")];
    report(
        2,
        "Darboux-dressed potential identity",
        &rows,
        start.elapsed().as_secs_f64(),
        5.0,
    );
}

#[test]
fn a3_scattering_identities_hold_on_random_reals() {
    let start = Instant::now();
    let rows = suites::scattering_identities(2.0, 1000, 7).expect("suite ran");
    report(
        3,
        "unitarity and left/right identities",
        &rows,
        start.elapsed().as_secs_f64(),
        1.0,
    );
}

#[test]
fn a4_partial_transmission_laws() {
    let start = Instant::now();
    let rows = suites::partial_transmission_laws(2.0, 50, 7).expect("suite ran");
    report(
        4,
        "jump, symmetries, factorization, A0, dilog oracle",
        &rows,
        start.elapsed().as_secs_f64(),
        60.0,
    );
}

#[test]
fn a5_band_edge_model_converges() {
    let start = Instant::now();
    let rows = suites::edge_model(2.0).expect("suite ran");
    report(
        5,
        "band-edge model error decreases",
        &rows,
        start.elapsed().as_secs_f64(),
        60.0,
    );
}

#[test]
fn a6_riemann_hilbert_algebra() {
    let start = Instant::now();
    let rows = suites::rhp_algebra(2.0, 7).expect("suite ran");
    report(
        6,
        "dressed-jump factorization, det V, parametrix decay",
        &rows,
        start.elapsed().as_secs_f64(),
        120.0,
    );
}

#[test]
fn a7_main_theorem_internals() {
    let start = Instant::now();
    let rows = suites::asymptotic_internals(2.0).expect("suite ran");
    report(
        7,
        "beta modulus, route agreement, decay law",
        &rows,
        start.elapsed().as_secs_f64(),
        60.0,
    );
}

#[test]
fn a8_simulator_validity() {
    let start = Instant::now();
    let rows = suites::simulator_validity().expect("suite ran");
    report(
        8,
        "soliton, Airy limit, invariant drift",
        &rows,
        start.elapsed().as_secs_f64(),
        300.0,
    );
}

/// Exploratory: reported, never gating.  The desk-scale simulation is
/// compared against a t → ∞ statement; the tolerances (10% wavelength,
/// factor-2 envelope) are printed for information.
#[test]
fn a9_exploratory_ray_comparison() {
    let start = Instant::now();
    let rows = suites::ray_comparison().expect("suite ran");
    let elapsed = start.elapsed().as_secs_f64();
    let passed = suites::all_pass(&rows);
    println!(
        "criterion 9 (exploratory ray comparison, non-gating): {} in {elapsed:.2} s",
        if passed { "PASS" } else { "FAIL" }
    );
    for r in &rows {
        println!(
            "  {:<28} points {:>6}  max_err {:>12.3e}  tolerance {:>12.3e}  {}",
            r.name,
            r.points,
            r.max_err,
            r.tolerance,
            if r.pass() { "pass" } else { "FAIL" }
        );
    }
    // Only the runtime budget gates: the comparison itself is
    // informational by design.
    assert!(
        elapsed < 1200.0,
        "exploratory comparison took {elapsed:.0} s, budget 1200 s"
    );
}
