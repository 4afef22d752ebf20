// SPDX-License-Identifier: MIT OR Apache-2.0
//! Numerical kernels for the resonance regime of the Korteweg–de Vries
//! equation with a Wigner–von Neumann type initial datum.
//!
//! The crate evaluates, and cross-verifies by independent routes, every
//! desk-scale computable object of that analysis:
//!
//! * [`params`] — the single physical parameter κ and its derived constants
//!   (coupling `a`, resonance index `ν`, scattering poles `k±`).
//! * [`scattering`] — exact transmission/reflection coefficients `T`, `R`
//!   of the Schrödinger operator for this potential family.
//! * [`potential`] — the closed-form potentials `q₀` (pre-Darboux) and `q`
//!   (the initial datum), plus their oscillatory tail model.
//! * [`jost`] — the explicit left Jost solution for `q₀` and the Darboux
//!   transformation reproducing `q`.
//! * [`quad`] — double-exponential (tanh-sinh) and adaptive Gauss–Kronrod
//!   quadrature with endpoint-singularity support, and Cauchy principal
//!   values by symmetric subtraction.
//! * [`special`] — complex dilogarithm and log-gamma.
//! * [`partial`] — the partial transmission coefficient `T₀`: Cauchy
//!   integral, Plemelj boundary values, regular/singular factorization,
//!   and the unimodular constant `A₀`.
//! * [`rhp`] — Riemann–Hilbert algebra: phase `Φ`, jump matrix `V`,
//!   triangular conjugation factors `B±`, and the rescaled local
//!   parametrix data near the resonance point `k = 1`.
//! * [`asym`] — the final large-time waveform on the ray `x = −12t`:
//!   `ν(t)`, phase constant `δ`, coefficient `β(t)`, and the two
//!   independent evaluation routes for `q(−12t, t)`.
//! * [`ode`]/[`direct`] — an adaptive Runge–Kutta oracle that recovers
//!   `T`, `R` by integrating the Schrödinger equation across the support
//!   of the potential, validating the closed forms without using them.
//!
//! The crate is `no_std`-compatible (disable the default `std` feature);
//! all routines are allocation-free pure functions of `f64`/[`C64`] inputs
//! and are safe for unrestricted concurrent use.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]
#![warn(missing_docs)]

pub mod asym;
pub mod direct;
pub mod error;
pub mod jost;
pub mod mat2;
pub mod ode;
pub mod params;
pub mod partial;
pub mod potential;
pub mod quad;
pub mod rhp;
pub mod scattering;
pub mod special;

/// The universal complex scalar of scattering theory.
pub type C64 = num_complex::Complex<f64>;

pub use error::{CoreError, Result};
pub use params::ResonanceParams;

/// `i`, the imaginary unit.
pub const I: C64 = C64::new(0.0, 1.0);

/// Complex number from real and imaginary parts (shorthand).
#[inline]
pub const fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
