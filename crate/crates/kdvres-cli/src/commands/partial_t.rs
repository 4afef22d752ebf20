// SPDX-License-Identifier: MIT OR Apache-2.0
//! `partial-t`: evaluate the partial transmission coefficient along a
//! contour.  Real points inside the band emit both Plemelj boundary
//! values (`side` = `plus`/`minus`); everything else emits the off-band
//! value (`side` = `off`).

use anyhow::Result;
use kdvres_core::partial::{boundary_values, partial_transmission};
use kdvres_core::quad::QuadratureSpec;
use kdvres_core::ResonanceParams;

use crate::cli::PartialTArgs;
use crate::grid::parse_contour;
use crate::manifest::{RunManifest, DEFAULT_SEED};
use crate::output::{fmt_float, resolve_out, write_csv};
use crate::Outcome;

/// Runs the subcommand.
pub fn run(args: &PartialTArgs) -> Result<Outcome> {
    let p = ResonanceParams::new(args.kappa)?;
    let spec = QuadratureSpec::default();
    let contour = parse_contour(&args.k_grid)?;
    let mut rows = Vec::new();
    for &k in &contour {
        if k.im == 0.0 && k.re.abs() < 1.0 {
            let b = boundary_values(k.re, &p, &spec)?;
            for (side, value) in [("plus", b.plus), ("minus", b.minus)] {
                rows.push(vec![
                    fmt_float(k.re),
                    fmt_float(0.0),
                    side.to_string(),
                    fmt_float(value.re),
                    fmt_float(value.im),
                    fmt_float(b.est_error),
                ]);
            }
        } else {
            let v = partial_transmission(k, &p, &spec)?;
            rows.push(vec![
                fmt_float(k.re),
                fmt_float(k.im),
                "off".to_string(),
                fmt_float(v.value.re),
                fmt_float(v.value.im),
                fmt_float(v.est_error),
            ]);
        }
    }
    let out = resolve_out(&args.out);
    write_csv(
        &out,
        &["re_k", "im_k", "side", "re_t0", "im_t0", "est_err"],
        &rows,
    )?;
    RunManifest::new("partial-t", DEFAULT_SEED)
        .param("kappa", args.kappa)
        .param("k_grid", &args.k_grid)
        .output(&out)
        .write_for_file(&out)?;
    println!("wrote {} boundary/off-band values to {}", rows.len(), out.display());
    Ok(Outcome::Pass)
}
