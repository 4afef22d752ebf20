// SPDX-License-Identifier: MIT OR Apache-2.0
//! `verify-scatter`: the scattering-side verification gate — randomized
//! unitarity and left/right identities plus the dressing identity that
//! rebuilds the initial datum from its Jost solution.

use anyhow::Result;

use crate::cli::VerifyScatterArgs;
use crate::commands::finish_verification;
use crate::manifest::RunManifest;
use crate::suites::{darboux_identity, override_tolerances, scattering_identities};
use crate::Outcome;

/// Runs the subcommand.
pub fn run(args: &VerifyScatterArgs) -> Result<Outcome> {
    let mut rows = scattering_identities(args.kappa, args.points, args.seed)?;
    rows.push(darboux_identity(&[args.kappa], 500)?);
    override_tolerances(&mut rows, args.tol);
    let mut manifest = RunManifest::new("verify-scatter", args.seed);
    manifest
        .param("kappa", args.kappa)
        .param("points", args.points);
    if let Some(tol) = args.tol {
        manifest.param("tol", tol);
    }
    finish_verification(&rows, None, args.out.as_deref(), &mut manifest)
}
