// SPDX-License-Identifier: MIT OR Apache-2.0
//! Command-line driver for the `kdvres` workspace: reproduction runs,
//! verification suites, and CSV/JSON data export.
//!
//! The library side exists so that the verification [`suites`] are shared
//! between the `check-all` subcommand and the acceptance tests; everything
//! else is plumbing for the `kdvres` binary:
//!
//! * [`cli`] — the argument grammar (one subcommand per export/check).
//! * [`grid`] — evaluation grids: linear, geometric, seeded-random, and
//!   the `--k-grid` contour parsers.
//! * [`manifest`] — the reproducibility manifest written alongside every
//!   output file.
//! * [`output`] — deterministic 17-significant-digit CSV serialization
//!   and the output-directory override.
//! * [`commands`] — one module per subcommand.
//!
//! Exit codes: `0` success, `1` a numerical verification suite failed,
//! `2` usage or runtime error.

#![deny(unsafe_code)]
#![warn(missing_docs)]

pub mod cli;
pub mod commands;
pub mod grid;
pub mod manifest;
pub mod output;
pub mod suites;

/// How a successfully *executed* invocation ended: data-export commands
/// always pass, verification commands pass only when every suite does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// Everything requested succeeded.
    Pass,
    /// At least one verification suite exceeded its tolerance.
    Fail,
}

/// Dispatches a parsed command line.  Errors are usage/runtime problems
/// (exit 2); numerical verification failures are the [`Outcome::Fail`]
/// value (exit 1).
pub fn run(cli: cli::Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        cli::Command::GenData(args) => commands::gen_data::run(&args),
        cli::Command::Scatter(args) => commands::scatter::run(&args),
        cli::Command::VerifyScatter(args) => commands::verify_scatter::run(&args),
        cli::Command::PartialT(args) => commands::partial_t::run(&args),
        cli::Command::VerifyRhp(args) => commands::verify_rhp::run(&args),
        cli::Command::Asymptote(args) => commands::asymptote::run(&args),
        cli::Command::Simulate(args) => commands::simulate::run(&args),
        cli::Command::Compare(args) => commands::compare::run(&args),
        cli::Command::CheckAll(args) => commands::check_all::run(&args),
    }
}
