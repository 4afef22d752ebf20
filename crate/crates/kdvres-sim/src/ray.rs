// SPDX-License-Identifier: MIT OR Apache-2.0
//! Extraction of the modulated wave along the resonance rays `x = −12t`:
//! local wavelength from zero-crossing spacing and the window envelope,
//! the two observables the asymptotic formula predicts (`wavelength → π`,
//! envelope `→ √(4ν/3t)`).

use crate::field::WaveField;

/// Observables of one field in a window around the ray point `x = −12t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RaySample {
    /// Field time.
    pub t: f64,
    /// Ray point `−12t`.
    pub x_center: f64,
    /// Window actually used (clamped to the grid).
    pub window: (f64, f64),
    /// Local wavelength `2·median(zero-crossing spacing)`, when at least
    /// three crossings lie in the window.
    pub wavelength: Option<f64>,
    /// `max |q|` over the window.
    pub envelope: f64,
    /// Number of zero crossings found.
    pub crossings: usize,
    /// Field value interpolated at the ray point.
    pub q_center: f64,
}

/// Samples the window `[−12t − half_width, −12t + half_width]`.
///
/// Zero crossings are located by linear interpolation between samples of
/// opposite sign; the median spacing is robust against the slow amplitude
/// modulation that makes individual spacings asymmetric.
pub fn sample_along_ray(field: &WaveField, half_width: f64) -> RaySample {
    let x_center = -12.0 * field.t;
    let lo = field.nearest_index(x_center - half_width);
    let hi = field.nearest_index(x_center + half_width);
    let mut crossings = Vec::new();
    let mut envelope = 0.0f64;
    for j in lo..=hi {
        let v = field.values[j];
        envelope = envelope.max(v.abs());
        if j + 1 <= hi {
            let w = field.values[j + 1];
            if v != 0.0 && v * w < 0.0 {
                crossings.push(field.x(j) + field.dx * v / (v - w));
            } else if v == 0.0 {
                crossings.push(field.x(j));
            }
        }
    }
    let wavelength = if crossings.len() >= 3 {
        let mut spacings: Vec<f64> = crossings.windows(2).map(|w| w[1] - w[0]).collect();
        spacings.sort_by(|a, b| a.partial_cmp(b).expect("finite spacings"));
        Some(2.0 * spacings[spacings.len() / 2])
    } else {
        None
    };
    RaySample {
        t: field.t,
        x_center,
        window: (field.x(lo), field.x(hi)),
        wavelength,
        envelope,
        crossings: crossings.len(),
        q_center: field.interpolate(x_center),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn synthetic(t: f64, amp: f64) -> WaveField {
        // A modulated carrier sin(2x) around the ray point.
        let n = 4096;
        let x0 = -12.0 * t - 20.0;
        let dx = 40.0 / n as f64;
        let xc = -12.0 * t;
        WaveField {
            t,
            x0,
            dx,
            values: (0..n)
                .map(|j| {
                    let x = x0 + j as f64 * dx;
                    let env = (-(x - xc) * (x - xc) / 200.0).exp();
                    amp * env * (2.0 * x).sin()
                })
                .collect(),
        }
    }

    #[test]
    fn recovers_the_carrier_wavelength_and_envelope() {
        let f = synthetic(2.0, 0.05);
        let s = sample_along_ray(&f, 12.0);
        let wl = s.wavelength.expect("enough crossings");
        assert_relative_eq!(wl, core::f64::consts::PI, max_relative = 1e-3);
        assert!(s.crossings > 10);
        assert_relative_eq!(s.envelope, 0.05, max_relative = 0.05);
        assert_eq!(s.x_center, -24.0);
        assert!((s.q_center - f.interpolate(-24.0)).abs() < 1e-15);
    }

    #[test]
    fn too_flat_a_window_yields_no_wavelength() {
        let f = WaveField {
            t: 1.0,
            x0: -30.0,
            dx: 0.01,
            values: vec![1.0; 4096],
        };
        let s = sample_along_ray(&f, 5.0);
        assert!(s.wavelength.is_none());
        assert_eq!(s.crossings, 0);
        assert_relative_eq!(s.envelope, 1.0);
    }

    #[test]
    fn window_is_clamped_to_the_grid() {
        let f = synthetic(0.0, 1.0);
        let s = sample_along_ray(&f, 1e6);
        assert_eq!(s.window.0, f.x0);
        assert_eq!(s.window.1, f.x(f.values.len() - 1));
    }
}
