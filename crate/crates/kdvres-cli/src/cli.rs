// SPDX-License-Identifier: MIT OR Apache-2.0
//! Argument grammar of the `kdvres` binary.
//!
//! Conventions shared by all subcommands:
//!
//! * `--out` names the primary output (a file, or a directory for
//!   `simulate`); relative paths are resolved against the
//!   `KDVRES_OUT_DIR` environment variable when it is set.
//! * every invocation that writes files also writes a manifest
//!   (see [`crate::manifest::RunManifest`]) next to them;
//! * `--k-grid` accepts either an explicit comma list (`0.3,0.5,2`) or a
//!   segment `start:stop:count` (`0.25:3:12`); `partial-t` additionally
//!   accepts complex literals such as `1.5+0.3i` or `2i` in both forms;
//! * `--seed` fixes the sample points of the randomized identity checks,
//!   making reruns byte-identical.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

/// Top-level command line.
#[derive(Debug, Parser)]
#[command(
    name = "kdvres",
    version,
    about = "Evaluate, export, and cross-verify the scattering, partial-transmission, \
             Riemann-Hilbert, and long-time asymptotic objects of the KdV resonance \
             regime, plus an independent pseudo-spectral simulator",
    after_help = "Exit codes: 0 = success, 1 = a verification suite failed, \
                  2 = usage or runtime error.\n\
                  Environment: KDVRES_OUT_DIR prefixes every relative output path."
)]
pub struct Cli {
    /// The selected subcommand.
    #[command(subcommand)]
    pub command: Command,
}

/// One variant per subcommand.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the potentials q0, q and the oscillatory tail model as CSV.
    GenData(GenDataArgs),
    /// Recover T, R by ODE integration and compare with the closed forms.
    Scatter(ScatterArgs),
    /// Randomized unitarity and left/right-coefficient identity checks.
    VerifyScatter(VerifyScatterArgs),
    /// Evaluate the partial transmission coefficient along a contour.
    PartialT(PartialTArgs),
    /// Verify the partial-transmission laws and the Riemann-Hilbert algebra.
    VerifyRhp(VerifyRhpArgs),
    /// Tabulate the long-time asymptotics on the ray x = -12t.
    Asymptote(AsymptoteArgs),
    /// Evolve the initial datum under KdV and export snapshots.
    Simulate(SimulateArgs),
    /// Simulate, then compare the field on the ray against the asymptotics.
    Compare(CompareArgs),
    /// Run every verification suite and print the aggregate table.
    CheckAll(CheckAllArgs),
}

/// Arguments of `gen-data`.
#[derive(Debug, Args)]
pub struct GenDataArgs {
    /// Resonance parameter kappa of the potential family.
    #[arg(long, default_value_t = 2.0)]
    pub kappa: f64,
    /// Left edge of the sample grid.
    #[arg(long, default_value_t = -60.0, allow_hyphen_values = true)]
    pub x_min: f64,
    /// Right edge of the sample grid.
    #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
    pub x_max: f64,
    /// Number of equispaced samples.
    #[arg(long, default_value_t = 1301)]
    pub points: usize,
    /// Output CSV path.
    #[arg(long, default_value = "gen-data.csv")]
    pub out: PathBuf,
}

/// Arguments of `scatter`.
#[derive(Debug, Args)]
pub struct ScatterArgs {
    /// Resonance parameter kappa of the initial datum.
    #[arg(long, default_value_t = 2.0)]
    pub kappa: f64,
    /// Real wavenumbers: comma list or start:stop:count segment; each must
    /// satisfy |k| >= 0.2 and |k -+ 1| >= 0.05.
    #[arg(long, default_value = "0.3,0.5,2,3", allow_hyphen_values = true)]
    pub k_grid: String,
    /// Truncation length L of the ODE integration interval [-L, 0].
    #[arg(long, default_value_t = 2000.0)]
    pub length: f64,
    /// Output CSV path.
    #[arg(long, default_value = "scatter.csv")]
    pub out: PathBuf,
}

/// Arguments of `verify-scatter`.
#[derive(Debug, Args)]
pub struct VerifyScatterArgs {
    /// Resonance parameter kappa.
    #[arg(long, default_value_t = 2.0)]
    pub kappa: f64,
    /// Number of random wavenumbers per identity.
    #[arg(long, default_value_t = 1000)]
    pub points: usize,
    /// Seed of the random sample points.
    #[arg(long, default_value_t = crate::manifest::DEFAULT_SEED)]
    pub seed: u64,
    /// Overrides the default tolerance (1e-12) of every identity.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Optional JSON report path.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Arguments of `partial-t`.
#[derive(Debug, Args)]
pub struct PartialTArgs {
    /// Resonance parameter kappa.
    #[arg(long, default_value_t = 2.0)]
    pub kappa: f64,
    /// Contour points: comma list or z0:z1:count segment of complex
    /// literals (`2i`, `1.5+0.3i`, `-0.5`).  Real points inside (-1, 1)
    /// produce both Plemelj boundary values (side plus/minus); all other
    /// points produce the continuous value (side off).
    #[arg(long, allow_hyphen_values = true)]
    pub k_grid: String,
    /// Output CSV path.
    #[arg(long, default_value = "partial-t.csv")]
    pub out: PathBuf,
}

/// Arguments of `verify-rhp`.
#[derive(Debug, Args)]
pub struct VerifyRhpArgs {
    /// Resonance parameter kappa.
    #[arg(long, default_value_t = 2.0)]
    pub kappa: f64,
    /// Number of interior band points for the jump law.
    #[arg(long, default_value_t = 50)]
    pub points: usize,
    /// Seed of the random sample points.
    #[arg(long, default_value_t = crate::manifest::DEFAULT_SEED)]
    pub seed: u64,
    /// Overrides every suite tolerance in this command.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Optional JSON report path.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Arguments of `asymptote`.
#[derive(Debug, Args)]
pub struct AsymptoteArgs {
    /// Resonance parameter kappa.
    #[arg(long, default_value_t = 2.0)]
    pub kappa: f64,
    /// First time of the (geometric) grid; must satisfy 48 a^2 t >= 1.
    #[arg(long, default_value_t = 10.0)]
    pub t_min: f64,
    /// Last time of the grid.
    #[arg(long, default_value_t = 1e4)]
    pub t_max: f64,
    /// Number of grid points.
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    /// Output CSV path.
    #[arg(long, default_value = "asymptote.csv")]
    pub out: PathBuf,
}

/// Simulation configuration overrides shared by `simulate` and `compare`:
/// a `--config` file (key = value lines) is applied over the built-in
/// defaults, then any explicit flag wins over both.
#[derive(Debug, Args, Clone)]
pub struct SimOverrides {
    /// Key = value configuration file applied over the defaults.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Resonance parameter kappa of the initial datum.
    #[arg(long)]
    pub kappa: Option<f64>,
    /// Periodic domain length.
    #[arg(long)]
    pub domain_length: Option<f64>,
    /// Number of grid points (a power of two, >= 4096).
    #[arg(long)]
    pub n_points: Option<usize>,
    /// Time step.
    #[arg(long)]
    pub dt: Option<f64>,
    /// Final time (negative evolves backwards); t_end/dt must be whole.
    #[arg(long, allow_hyphen_values = true)]
    pub t_end: Option<f64>,
    /// Width of the half-cosine taper at the left edge (0 disables).
    #[arg(long)]
    pub taper_width: Option<f64>,
    /// Time between stored snapshots (0 stores only initial and final).
    #[arg(long)]
    pub snapshot_every: Option<f64>,
    /// Right edge of the grid.
    #[arg(long)]
    pub x_right: Option<f64>,
    /// Fraction of the Nyquist band kept by the de-aliasing mask.
    #[arg(long)]
    pub dealias_frac: Option<f64>,
    /// Wrap-around guard threshold (energy fraction in the right 5%).
    #[arg(long)]
    pub wrap_guard_frac: Option<f64>,
}

/// Arguments of `simulate`.
#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Configuration file and overrides.
    #[command(flatten)]
    pub sim: SimOverrides,
    /// Output directory (snapshots, index, guard log, ray samples).
    #[arg(long, default_value = "sim-out")]
    pub out: PathBuf,
}

/// Arguments of `compare`.
#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Configuration file and overrides.  Unless set explicitly,
    /// snapshot_every defaults to 0.25 here (the ray needs a series).
    #[command(flatten)]
    pub sim: SimOverrides,
    /// First snapshot time included in the comparison.
    #[arg(long, default_value_t = 0.25)]
    pub t_min: f64,
    /// Half-width of the sampling window around x = -12t.
    #[arg(long, default_value_t = 12.0)]
    pub half_width: f64,
    /// Output CSV path.
    #[arg(long, default_value = "compare.csv")]
    pub out: PathBuf,
}

/// Arguments of `check-all`.
#[derive(Debug, Args)]
pub struct CheckAllArgs {
    /// Resonance parameter kappa for the single-parameter suites.
    #[arg(long, default_value_t = 2.0)]
    pub kappa: f64,
    /// Seed of the random sample points.
    #[arg(long, default_value_t = crate::manifest::DEFAULT_SEED)]
    pub seed: u64,
    /// Also run the exploratory simulation-vs-asymptotics ray comparison
    /// (minutes of runtime; reported but never gates the exit code).
    #[arg(long)]
    pub full: bool,
    /// Optional JSON report path.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
