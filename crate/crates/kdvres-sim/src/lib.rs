// SPDX-License-Identifier: MIT OR Apache-2.0
//! Pseudo-spectral simulation of the KdV flow
//!
//! ```text
//! q_t − 6 q q_x + q_xxx = 0
//! ```
//!
//! on a periodic domain, with fourth-order exponential time differencing
//! (ETDRK4) in Fourier space.  The crate prepares the resonance initial
//! datum on a grid (tapered to periodicity), steps it forward or backward
//! in time, tracks the conserved mass and energy, and extracts the
//! modulated wave along the rays `x = −12t` where the resonance
//! asymptotics apply.

#![deny(unsafe_code)]
#![warn(missing_docs)]

pub mod config;
pub mod etdrk4;
pub mod field;
pub mod ray;

pub use config::SimConfig;
pub use etdrk4::{run, run_linear, SimOutcome};
pub use field::{Conserved, WaveField};
pub use ray::RaySample;

/// Errors from configuration parsing or time stepping.
#[derive(Debug, thiserror::Error)]
pub enum SimError {
    /// Invalid or inconsistent configuration.
    #[error("configuration error: {0}")]
    Config(String),
    /// A core evaluation (initial datum, parameters) failed.
    #[error("core evaluation failed: {0}")]
    Core(#[from] kdvres_core::CoreError),
    /// The solution stopped being finite during time stepping.
    #[error("time stepping diverged at t = {t}")]
    Diverged {
        /// Simulation time at which non-finite values appeared.
        t: f64,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, SimError>;
