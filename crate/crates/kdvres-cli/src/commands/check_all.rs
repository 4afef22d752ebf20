// SPDX-License-Identifier: MIT OR Apache-2.0
//! `check-all`: every verification suite in one run.  Exit 0 only when
//! all gating suites pass; the exploratory ray comparison (`--full`) is
//! printed alongside but never gates.

use anyhow::Result;

use crate::cli::CheckAllArgs;
use crate::commands::finish_verification;
use crate::manifest::RunManifest;
use crate::suites::{gating_suites, ray_comparison};
use crate::Outcome;

/// Runs the subcommand.
pub fn run(args: &CheckAllArgs) -> Result<Outcome> {
    let rows = gating_suites(args.kappa, args.seed)?;
    let exploratory = if args.full {
        println!("(gating suites done; running the exploratory ray comparison, this takes minutes)");
        Some(ray_comparison()?)
    } else {
        None
    };
    let mut manifest = RunManifest::new("check-all", args.seed);
    manifest
        .param("kappa", args.kappa)
        .param("full", args.full);
    finish_verification(
        &rows,
        exploratory.as_deref(),
        args.out.as_deref(),
        &mut manifest,
    )
}
