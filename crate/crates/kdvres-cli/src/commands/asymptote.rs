// SPDX-License-Identifier: MIT OR Apache-2.0
//! `asymptote`: tabulate the long-time asymptotics on the ray
//! `x = −12t` — slowly growing ν(t), decaying amplitude, phase, and the
//! two evaluation routes of the leading term.

use anyhow::{Context, Result};
use kdvres_core::asym::{amplitude, nu_of_t, phase, phase_shift, q_alt, q_asym};
use kdvres_core::partial::factor_a0;
use kdvres_core::quad::QuadratureSpec;
use kdvres_core::ResonanceParams;

use crate::cli::AsymptoteArgs;
use crate::grid::geomspace;
use crate::manifest::{RunManifest, DEFAULT_SEED};
use crate::output::{fmt_float, resolve_out, write_csv};
use crate::Outcome;

/// Runs the subcommand.
pub fn run(args: &AsymptoteArgs) -> Result<Outcome> {
    let p = ResonanceParams::new(args.kappa)?;
    nu_of_t(args.t_min, &p)
        .context("t-min must lie inside the asymptotic regime t >= 1/(48 a^2)")?;
    let spec = QuadratureSpec::default();
    let a0 = factor_a0(&p, &spec)?;
    let delta = phase_shift(&p, &spec)?;
    let ts = geomspace(args.t_min, args.t_max, args.points)?;
    let mut rows = Vec::with_capacity(ts.len());
    for &t in &ts {
        rows.push(vec![
            fmt_float(t),
            fmt_float(nu_of_t(t, &p)?),
            fmt_float(amplitude(t, &p)?),
            fmt_float(phase(t, &p, delta)?),
            fmt_float(q_asym(t, &p, delta)?),
            fmt_float(q_alt(t, &p, a0)?),
        ]);
    }
    let out = resolve_out(&args.out);
    write_csv(
        &out,
        &["t", "nu", "amplitude", "phase", "q_asym", "q_alt"],
        &rows,
    )?;
    RunManifest::new("asymptote", DEFAULT_SEED)
        .param("kappa", args.kappa)
        .param("t_min", args.t_min)
        .param("t_max", args.t_max)
        .param("points", args.points)
        .output(&out)
        .write_for_file(&out)?;
    println!("wrote {} times to {}", rows.len(), out.display());
    Ok(Outcome::Pass)
}
