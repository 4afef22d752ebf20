// SPDX-License-Identifier: MIT OR Apache-2.0
//! `verify-rhp`: the Riemann-Hilbert-side verification gate — the
//! partial-transmission laws (jump, symmetries, factorization, edge
//! constant), the band-edge model, and the dressed-jump algebra with the
//! parametrix decay rate.

use anyhow::Result;

use crate::cli::VerifyRhpArgs;
use crate::commands::finish_verification;
use crate::manifest::RunManifest;
use crate::suites::{edge_model, override_tolerances, partial_transmission_laws, rhp_algebra};
use crate::Outcome;

/// Runs the subcommand.
pub fn run(args: &VerifyRhpArgs) -> Result<Outcome> {
    let mut rows = partial_transmission_laws(args.kappa, args.points, args.seed)?;
    rows.extend(edge_model(args.kappa)?);
    rows.extend(rhp_algebra(args.kappa, args.seed)?);
    override_tolerances(&mut rows, args.tol);
    let mut manifest = RunManifest::new("verify-rhp", args.seed);
    manifest
        .param("kappa", args.kappa)
        .param("points", args.points);
    if let Some(tol) = args.tol {
        manifest.param("tol", tol);
    }
    finish_verification(&rows, None, args.out.as_deref(), &mut manifest)
}
