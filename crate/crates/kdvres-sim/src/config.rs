// SPDX-License-Identifier: MIT OR Apache-2.0
//! Simulation configuration: a flat `key = value` format with defaults,
//! strict validation, and no silent fallbacks for misspelled keys.

use crate::{Result, SimError};

/// Smallest grid that resolves the `sin 2x` carrier of the datum together
/// with the dispersive radiation it sheds.
pub const MIN_POINTS: usize = 1 << 12;

/// Tapers narrower than this cut visibly into the `−4 sin(2x + δ)/x` tail;
/// `taper_width = 0` (no taper) is allowed for compactly supported fields.
pub const MIN_TAPER: f64 = 20.0;

/// Full configuration of one simulation run.
///
/// The grid covers `[x_right − domain_length, x_right]` with `n_points`
/// equispaced samples and periodic wrap-around.
#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    /// Periodic domain length.
    pub domain_length: f64,
    /// Number of grid points (a power of two).
    pub n_points: usize,
    /// Time step (may not be what a caller of [`crate::run`] uses for the
    /// sign: negative evolution is requested through `t_end < 0`).
    pub dt: f64,
    /// Final time; `t_end/dt` must be a whole number of steps.
    pub t_end: f64,
    /// Width of the half-cosine ramp applied at the left domain edge to
    /// make the datum periodic; `0` disables tapering.
    pub taper_width: f64,
    /// Resonance parameter κ of the initial datum.
    pub kappa: f64,
    /// Time between stored snapshots; `0` stores only initial and final.
    pub snapshot_every: f64,
    /// Right edge of the grid (the datum vanishes for `x ≥ 0`, so a small
    /// positive margin suffices there).
    pub x_right: f64,
    /// Fraction of the Nyquist band kept by the anti-aliasing mask.
    pub dealias_frac: f64,
    /// Energy fraction in the rightmost 5% of the domain above which a
    /// wrap-around guard event is recorded.
    pub wrap_guard_frac: f64,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            domain_length: 200.0,
            n_points: 1 << 12,
            dt: 2e-4,
            t_end: 1.0,
            taper_width: 25.0,
            kappa: 2.0,
            snapshot_every: 0.0,
            x_right: 50.0,
            dealias_frac: 2.0 / 3.0,
            wrap_guard_frac: 1e-6,
        }
    }
}

impl SimConfig {
    /// Parses a `key = value` document (one pair per line, `#` comments)
    /// on top of the defaults, then validates.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = SimConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                SimError::Config(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| {
                SimError::Config(format!("line {}: {} `{}`", lineno + 1, what, value))
            };
            let float = || value.parse::<f64>().map_err(|_| bad("not a number"));
            match key {
                "domain_length" => cfg.domain_length = float()?,
                "n_points" => {
                    cfg.n_points = value.parse::<usize>().map_err(|_| bad("not an integer"))?
                }
                "dt" => cfg.dt = float()?,
                "t_end" => cfg.t_end = float()?,
                "taper_width" => cfg.taper_width = float()?,
                "kappa" => cfg.kappa = float()?,
                "snapshot_every" => cfg.snapshot_every = float()?,
                "x_right" => cfg.x_right = float()?,
                "dealias_frac" => cfg.dealias_frac = float()?,
                "wrap_guard_frac" => cfg.wrap_guard_frac = float()?,
                other => {
                    return Err(SimError::Config(format!(
                        "line {}: unknown key `{other}`",
                        lineno + 1
                    )))
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Checks every field against its admissible range and the mutual
    /// consistency constraints (integral step count, domain large enough
    /// for the `x = −12t` ray plus taper).
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(SimError::Config(msg));
        if !self.domain_length.is_finite() || self.domain_length <= 0.0 {
            return fail(format!("domain_length = {} must be > 0", self.domain_length));
        }
        if !self.n_points.is_power_of_two() || self.n_points < MIN_POINTS {
            return fail(format!(
                "n_points = {} must be a power of two >= {MIN_POINTS}",
                self.n_points
            ));
        }
        if !self.dt.is_finite() || self.dt <= 0.0 || self.dt > 0.01 {
            return fail(format!("dt = {} must lie in (0, 0.01]", self.dt));
        }
        if !self.t_end.is_finite() || self.t_end == 0.0 {
            return fail(format!("t_end = {} must be nonzero and finite", self.t_end));
        }
        let steps = (self.t_end / self.dt).abs();
        if (steps - steps.round()).abs() > 1e-6 * steps.max(1.0) {
            return fail(format!(
                "t_end = {} is not a whole number of dt = {} steps",
                self.t_end, self.dt
            ));
        }
        if steps.round() > 5e7 {
            return fail(format!("{} steps exceed the budget of 5e7", steps.round()));
        }
        if self.taper_width != 0.0
            && (!(self.taper_width >= MIN_TAPER) || self.taper_width > self.domain_length / 4.0)
        {
            return fail(format!(
                "taper_width = {} must be 0 or in [{MIN_TAPER}, domain_length/4]",
                self.taper_width
            ));
        }
        if !self.kappa.is_finite() || self.kappa <= 0.0 {
            return fail(format!("kappa = {} must be > 0", self.kappa));
        }
        if self.snapshot_every < 0.0 || !self.snapshot_every.is_finite() {
            return fail(format!(
                "snapshot_every = {} must be >= 0",
                self.snapshot_every
            ));
        }
        if !self.x_right.is_finite() || self.x_right < 0.0 {
            return fail(format!("x_right = {} must be >= 0", self.x_right));
        }
        if self.t_end > 0.0 {
            let needed = 12.0 * self.t_end + self.taper_width + 10.0 + self.x_right;
            if self.domain_length < needed {
                return fail(format!(
                    "domain_length = {} cannot hold the x = -12t ray until t_end = {} \
                     (needs >= {needed})",
                    self.domain_length, self.t_end
                ));
            }
        }
        if !(self.dealias_frac > 0.5 && self.dealias_frac <= 1.0) {
            return fail(format!(
                "dealias_frac = {} must lie in (0.5, 1]",
                self.dealias_frac
            ));
        }
        if !(self.wrap_guard_frac > 0.0 && self.wrap_guard_frac < 1.0) {
            return fail(format!(
                "wrap_guard_frac = {} must lie in (0, 1)",
                self.wrap_guard_frac
            ));
        }
        Ok(())
    }

    /// Grid spacing `domain_length / n_points`.
    pub fn dx(&self) -> f64 {
        self.domain_length / self.n_points as f64
    }

    /// Left edge of the grid.
    pub fn x_left(&self) -> f64 {
        self.x_right - self.domain_length
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        SimConfig::default().validate().unwrap();
    }

    #[test]
    fn parses_a_full_document() {
        let cfg = SimConfig::parse(
            "# resonance run\n\
             domain_length = 600\n\
             n_points = 32768\n\
             dt = 1e-4\n\
             t_end = 6.5   # covers the window\n\
             taper_width = 50\n\
             kappa = 2.0\n\
             snapshot_every = 0.25\n\
             x_right = 50\n\
             wrap_guard_frac = 0.05\n",
        )
        .unwrap();
        assert_eq!(cfg.n_points, 32768);
        assert_eq!(cfg.snapshot_every, 0.25);
        assert_eq!(cfg.x_left(), -550.0);
        assert!((cfg.dx() - 600.0 / 32768.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_unknown_keys_and_syntax() {
        assert!(SimConfig::parse("n_pts = 4096").is_err());
        assert!(SimConfig::parse("just some words").is_err());
        assert!(SimConfig::parse("dt = fast").is_err());
    }

    #[test]
    fn rejects_out_of_range_values() {
        let cases = [
            ("n_points = 1000", "power of two"),
            ("n_points = 1024", "minimum size"),
            ("dt = 0.5", "dt range"),
            ("dt = 1e-4\nt_end = 0.00015", "non-integral steps"),
            ("taper_width = 5", "taper too narrow"),
            ("kappa = -1", "kappa sign"),
            ("dealias_frac = 0.4", "dealias range"),
            ("t_end = 40", "domain too short for the ray"),
        ];
        for (doc, why) in cases {
            assert!(SimConfig::parse(doc).is_err(), "{why}: `{doc}`");
        }
    }

    #[test]
    fn backward_evolution_skips_the_ray_bound() {
        let cfg = SimConfig {
            t_end: -1.0,
            ..SimConfig::default()
        };
        cfg.validate().unwrap();
    }
}
