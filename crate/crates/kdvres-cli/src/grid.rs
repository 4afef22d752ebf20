// SPDX-License-Identifier: MIT OR Apache-2.0
//! Evaluation grids: linear and geometric spacings, the `--k-grid`
//! parsers, and the seeded sample points of the randomized checks.
//!
//! Grid syntax (shared by `scatter` and `partial-t`):
//!
//! * `v1,v2,v3` — explicit list;
//! * `start:stop:count` — `count` evenly spaced points, endpoints
//!   included (`count = 1` gives just `start`).
//!
//! `partial-t` entries are complex literals: `2`, `2i`, `1.5+0.3i`,
//! `-0.5-1e-3i`, with a bare `i` meaning `1i`.

use anyhow::{bail, Context, Result};
use kdvres_core::{c64, C64};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `n` evenly spaced points covering `[a, b]`; `n = 1` gives `[a]`.
pub fn linspace(a: f64, b: f64, n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        bail!("a grid needs at least one point");
    }
    if n == 1 {
        return Ok(vec![a]);
    }
    let step = (b - a) / (n - 1) as f64;
    Ok((0..n).map(|j| a + step * j as f64).collect())
}

/// `n` geometrically spaced points covering `[a, b]` (both positive).
pub fn geomspace(a: f64, b: f64, n: usize) -> Result<Vec<f64>> {
    if !(a > 0.0) || !(b > 0.0) || !a.is_finite() || !b.is_finite() {
        bail!("a geometric grid needs positive finite endpoints");
    }
    Ok(linspace(a.ln(), b.ln(), n)?.into_iter().map(f64::exp).collect())
}

/// Parses a real grid: explicit comma list or `start:stop:count`.
pub fn parse_real_grid(text: &str) -> Result<Vec<f64>> {
    let text = text.trim();
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            bail!("grid segment must be start:stop:count, got `{text}`");
        }
        let a: f64 = parts[0].trim().parse().context("bad segment start")?;
        let b: f64 = parts[1].trim().parse().context("bad segment stop")?;
        let n: usize = parts[2].trim().parse().context("bad segment count")?;
        linspace(a, b, n)
    } else {
        text.split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .with_context(|| format!("bad grid entry `{s}`"))
            })
            .collect()
    }
}

fn parse_imag_tail(s: &str) -> Result<f64> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => s
            .parse::<f64>()
            .with_context(|| format!("bad imaginary part `{s}`")),
    }
}

/// Parses one complex literal (`2`, `2i`, `1.5+0.3i`, `-1e-2-3i`, `i`).
pub fn parse_complex(text: &str) -> Result<C64> {
    let t = text.trim();
    if t.is_empty() {
        bail!("empty complex literal");
    }
    let Some(body) = t.strip_suffix(['i', 'I']) else {
        let re: f64 = t
            .parse()
            .with_context(|| format!("bad complex literal `{t}`"))?;
        return Ok(c64(re, 0.0));
    };
    // Split before the sign of the imaginary part: the last '+'/'-' that
    // is neither leading nor an exponent sign.
    let mut split = None;
    for (idx, ch) in body.char_indices().skip(1) {
        if (ch == '+' || ch == '-') && !matches!(&body[idx - 1..idx], "e" | "E") {
            split = Some(idx);
        }
    }
    match split {
        Some(idx) => {
            let re: f64 = body[..idx]
                .trim()
                .parse()
                .with_context(|| format!("bad real part in `{t}`"))?;
            Ok(c64(re, parse_imag_tail(body[idx..].trim())?))
        }
        None => Ok(c64(0.0, parse_imag_tail(body.trim())?)),
    }
}

/// Parses a complex contour: explicit comma list or the linear segment
/// `z0:z1:count` between two complex endpoints.
pub fn parse_contour(text: &str) -> Result<Vec<C64>> {
    let text = text.trim();
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            bail!("contour segment must be z0:z1:count, got `{text}`");
        }
        let z0 = parse_complex(parts[0])?;
        let z1 = parse_complex(parts[1])?;
        let n: usize = parts[2].trim().parse().context("bad segment count")?;
        if n == 0 {
            bail!("a contour needs at least one point");
        }
        if n == 1 {
            return Ok(vec![z0]);
        }
        Ok((0..n)
            .map(|j| z0 + (z1 - z0) * (j as f64 / (n - 1) as f64))
            .collect())
    } else {
        text.split(',').map(parse_complex).collect()
    }
}

/// Deterministic uniform sample points for the randomized identity
/// checks (ChaCha8 keyed by the manifest seed).
pub struct SeededPoints {
    rng: ChaCha8Rng,
}

impl SeededPoints {
    /// Starts the stream for `seed`.
    pub fn new(seed: u64) -> Self {
        SeededPoints {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Next sample in `[0, 1)` (53 uniform mantissa bits).
    pub fn unit(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * 2f64.powi(-53)
    }

    /// Next sample in `[lo, hi)`.
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }
}
