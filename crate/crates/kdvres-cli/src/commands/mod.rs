// SPDX-License-Identifier: MIT OR Apache-2.0
//! One module per subcommand, plus the plumbing they share: the JSON
//! verification report and the simulation-config override resolution.

pub mod asymptote;
pub mod check_all;
pub mod compare;
pub mod gen_data;
pub mod partial_t;
pub mod scatter;
pub mod simulate;
pub mod verify_scatter;
pub mod verify_rhp;

use std::path::Path;

use anyhow::{Context, Result};
use kdvres_sim::SimConfig;
use serde::Serialize;

use crate::cli::SimOverrides;
use crate::manifest::RunManifest;
use crate::output::{resolve_out, write_text};
use crate::suites::{all_pass, print_table, SuiteReport};
use crate::Outcome;

/// One suite row in the JSON report (the table row plus its verdict).
#[derive(Serialize)]
struct ReportRow<'a> {
    name: &'a str,
    points: usize,
    max_err: f64,
    tolerance: f64,
    pass: bool,
}

/// The JSON verification report: every gating row, the aggregate
/// verdict, and (for `check-all --full`) the exploratory rows that never
/// influence `passed`.
#[derive(Serialize)]
struct Report<'a> {
    suites: Vec<ReportRow<'a>>,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    exploratory: Option<Vec<ReportRow<'a>>>,
}

fn report_rows(rows: &[SuiteReport]) -> Vec<ReportRow<'_>> {
    rows.iter()
        .map(|r| ReportRow {
            name: &r.name,
            points: r.points,
            max_err: r.max_err,
            tolerance: r.tolerance,
            pass: r.pass(),
        })
        .collect()
}

/// Prints the suite table (and the exploratory one, when present),
/// writes the optional JSON report plus its manifest, and converts the
/// aggregate verdict into an [`Outcome`].
pub(crate) fn finish_verification(
    rows: &[SuiteReport],
    exploratory: Option<&[SuiteReport]>,
    out: Option<&Path>,
    manifest: &mut RunManifest,
) -> Result<Outcome> {
    print_table(rows);
    if let Some(extra) = exploratory {
        println!();
        println!("exploratory (reported only, never gates the exit code):");
        print_table(extra);
    }
    let passed = all_pass(rows);
    if let Some(out) = out {
        let report = Report {
            suites: report_rows(rows),
            passed,
            exploratory: exploratory.map(report_rows),
        };
        let path = resolve_out(out);
        let json = serde_json::to_string_pretty(&report).context("serializing report")? + "\n";
        write_text(&path, &json)?;
        manifest.output(&path);
        manifest.write_for_file(&path)?;
        println!("report written to {}", path.display());
    }
    println!(
        "{}",
        if passed {
            "all suites passed"
        } else {
            "SUITE FAILURE (see table above)"
        }
    );
    Ok(if passed { Outcome::Pass } else { Outcome::Fail })
}

/// Resolves the effective simulation configuration: defaults, then the
/// `--config` file, then the individual flag overrides; validated at the
/// end.
pub(crate) fn build_sim_config(o: &SimOverrides) -> Result<SimConfig> {
    let mut cfg = match &o.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?;
            SimConfig::parse(&text)
                .with_context(|| format!("parsing config {}", path.display()))?
        }
        None => SimConfig::default(),
    };
    if let Some(v) = o.kappa {
        cfg.kappa = v;
    }
    if let Some(v) = o.domain_length {
        cfg.domain_length = v;
    }
    if let Some(v) = o.n_points {
        cfg.n_points = v;
    }
    if let Some(v) = o.dt {
        cfg.dt = v;
    }
    if let Some(v) = o.t_end {
        cfg.t_end = v;
    }
    if let Some(v) = o.taper_width {
        cfg.taper_width = v;
    }
    if let Some(v) = o.snapshot_every {
        cfg.snapshot_every = v;
    }
    if let Some(v) = o.x_right {
        cfg.x_right = v;
    }
    if let Some(v) = o.dealias_frac {
        cfg.dealias_frac = v;
    }
    if let Some(v) = o.wrap_guard_frac {
        cfg.wrap_guard_frac = v;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Records the fully resolved simulation configuration in a manifest, so
/// a rerun needs no config file.
pub(crate) fn sim_params(m: &mut RunManifest, cfg: &SimConfig) {
    m.param("kappa", cfg.kappa)
        .param("domain_length", cfg.domain_length)
        .param("n_points", cfg.n_points)
        .param("dt", cfg.dt)
        .param("t_end", cfg.t_end)
        .param("taper_width", cfg.taper_width)
        .param("snapshot_every", cfg.snapshot_every)
        .param("x_right", cfg.x_right)
        .param("dealias_frac", cfg.dealias_frac)
        .param("wrap_guard_frac", cfg.wrap_guard_frac);
}
