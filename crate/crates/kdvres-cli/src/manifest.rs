// SPDX-License-Identifier: MIT OR Apache-2.0
//! The reproducibility manifest written alongside every output file.
//!
//! A manifest records the subcommand, its fully resolved parameters, the
//! produced file names, the random seed, and the tool version; re-running
//! the same subcommand with the same parameters reproduces every output
//! byte-for-byte (fixed seed, fixed quadrature, no timestamps).  The
//! schema ships in `docs/run_manifest.schema.json`.

use anyhow::Result;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::Path;

/// Tool/version string stamped into every manifest.
pub const VERSIONS: &str = concat!("kdvres ", env!("CARGO_PKG_VERSION"));

/// Default seed of the randomized identity checks.
pub const DEFAULT_SEED: u64 = 7;

/// See the module docs; field order is fixed by the struct (serde) and
/// parameters are a sorted map, so serialization is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    /// Subcommand that produced the outputs.
    pub subcommand: String,
    /// Fully resolved parameters (defaults included), as display strings.
    pub parameters: BTreeMap<String, String>,
    /// Names of the produced files, relative to the manifest location.
    pub output_paths: Vec<String>,
    /// Seed used for any randomized sample points (the default seed when
    /// the subcommand draws none).
    pub seed: u64,
    /// Tool/version string.
    pub versions: String,
}

impl RunManifest {
    /// Starts an empty manifest for `subcommand`.
    pub fn new(subcommand: &str, seed: u64) -> Self {
        RunManifest {
            subcommand: subcommand.to_string(),
            parameters: BTreeMap::new(),
            output_paths: Vec::new(),
            seed,
            versions: VERSIONS.to_string(),
        }
    }

    /// Records one resolved parameter.
    pub fn param(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    /// Records one produced file (stored by file name: all outputs of an
    /// invocation live next to their manifest).
    pub fn output(&mut self, path: &Path) -> &mut Self {
        let name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        self.output_paths.push(name);
        self
    }

    /// Serializes the manifest (pretty JSON plus trailing newline).
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
        text.push('\n');
        text
    }

    /// Writes the manifest next to the primary output file, as
    /// `<stem>.manifest.json`, and returns nothing on success.
    pub fn write_for_file(&self, primary: &Path) -> Result<()> {
        let stem = primary
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "run".to_string());
        let path = primary.with_file_name(format!("{stem}.manifest.json"));
        crate::output::write_text(&path, &self.to_json())
    }

    /// Writes the manifest into an output directory as
    /// `run.manifest.json`.
    pub fn write_in_dir(&self, dir: &Path) -> Result<()> {
        crate::output::write_text(&dir.join("run.manifest.json"), &self.to_json())
    }
}
