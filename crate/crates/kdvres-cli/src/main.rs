// SPDX-License-Identifier: MIT OR Apache-2.0
//! The `kdvres` binary: thin wrapper mapping [`kdvres_cli::run`] onto the
//! documented exit codes (0 pass, 1 numerical failure, 2 usage/runtime).

use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    // Clap itself exits with code 2 on unknown flags or subcommands.
    let cli = kdvres_cli::cli::Cli::parse();
    match kdvres_cli::run(cli) {
        Ok(kdvres_cli::Outcome::Pass) => ExitCode::SUCCESS,
        Ok(kdvres_cli::Outcome::Fail) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
