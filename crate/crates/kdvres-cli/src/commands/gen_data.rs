// SPDX-License-Identifier: MIT OR Apache-2.0
//! `gen-data`: sample the background potential, the initial datum, and
//! the oscillatory tail model on a uniform grid.

use anyhow::Result;
use kdvres_core::potential::{q, q0, tail_model};
use kdvres_core::ResonanceParams;

use crate::cli::GenDataArgs;
use crate::grid::linspace;
use crate::manifest::{RunManifest, DEFAULT_SEED};
use crate::output::{fmt_float, resolve_out, write_csv};
use crate::Outcome;

/// Runs the subcommand.
pub fn run(args: &GenDataArgs) -> Result<Outcome> {
    let p = ResonanceParams::new(args.kappa)?;
    let xs = linspace(args.x_min, args.x_max, args.points)?;
    let mut rows = Vec::with_capacity(xs.len());
    for &x in &xs {
        // Both potentials vanish on [0, ∞); the tail model does not (it
        // diverges at 0), so clamp it to the support explicitly.
        let tail = if x < 0.0 { tail_model(x, &p) } else { 0.0 };
        rows.push(vec![
            fmt_float(x),
            fmt_float(q0(x, p.a())?),
            fmt_float(q(x, &p)?),
            fmt_float(tail),
        ]);
    }
    let out = resolve_out(&args.out);
    write_csv(&out, &["x", "q0", "q", "tail_model"], &rows)?;
    RunManifest::new("gen-data", DEFAULT_SEED)
        .param("kappa", args.kappa)
        .param("x_min", args.x_min)
        .param("x_max", args.x_max)
        .param("points", args.points)
        .output(&out)
        .write_for_file(&out)?;
    println!("wrote {} samples to {}", rows.len(), out.display());
    Ok(Outcome::Pass)
}
