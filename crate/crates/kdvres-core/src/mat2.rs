// SPDX-License-Identifier: MIT OR Apache-2.0
//! Minimal 2×2 complex matrices for jump-factorization algebra.
//!
//! The factorization checks multiply a handful of triangular and diagonal
//! matrices; a fixed-size value type with explicit entries keeps that
//! allocation-free and easy to audit.

use crate::error::{CoreError, Result};
use crate::{c64, C64};

/// A 2×2 complex matrix in row-major entry order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    /// Row 1, column 1.
    pub m11: C64,
    /// Row 1, column 2.
    pub m12: C64,
    /// Row 2, column 1.
    pub m21: C64,
    /// Row 2, column 2.
    pub m22: C64,
}

impl Mat2 {
    /// Build from entries.
    pub const fn new(m11: C64, m12: C64, m21: C64, m22: C64) -> Self {
        Self { m11, m12, m21, m22 }
    }

    /// The identity matrix.
    pub const fn identity() -> Self {
        Self::new(c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), c64(1.0, 0.0))
    }

    /// `diag(f, 1/f)` — conjugation by the third Pauli matrix exponent,
    /// written `f^{σ₃}` in factorization identities.
    pub fn sigma3_power(f: C64) -> Self {
        Self::new(f, c64(0.0, 0.0), c64(0.0, 0.0), 1.0 / f)
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            self.m11 * rhs.m11 + self.m12 * rhs.m21,
            self.m11 * rhs.m12 + self.m12 * rhs.m22,
            self.m21 * rhs.m11 + self.m22 * rhs.m21,
            self.m21 * rhs.m12 + self.m22 * rhs.m22,
        )
    }

    /// Determinant.
    pub fn det(&self) -> C64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// Inverse; [`CoreError::DegenerateMatching`] if the determinant
    /// vanishes to working precision.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.norm() < 1e-300 {
            return Err(CoreError::DegenerateMatching);
        }
        Ok(Self::new(
            self.m22 / d,
            -self.m12 / d,
            -self.m21 / d,
            self.m11 / d,
        ))
    }

    /// Entry-wise difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(
            self.m11 - rhs.m11,
            self.m12 - rhs.m12,
            self.m21 - rhs.m21,
            self.m22 - rhs.m22,
        )
    }

    /// Largest entry modulus — the residual norm used by the
    /// factorization tests.
    pub fn max_abs(&self) -> f64 {
        self.m11
            .norm()
            .max(self.m12.norm())
            .max(self.m21.norm())
            .max(self.m22.norm())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Mat2 {
        Mat2::new(c64(1.0, 2.0), c64(0.5, -1.0), c64(-2.0, 0.25), c64(3.0, 1.0))
    }

    #[test]
    fn identity_is_neutral() {
        let m = sample();
        let e = Mat2::identity();
        assert_eq!(m.mul(&e), m);
        assert_eq!(e.mul(&m), m);
    }

    #[test]
    fn inverse_times_self_is_identity() {
        let m = sample();
        let r = m.inverse().unwrap().mul(&m).sub(&Mat2::identity());
        assert!(r.max_abs() < 1e-15);
    }

    #[test]
    fn determinant_is_multiplicative() {
        let a = sample();
        let b = Mat2::new(c64(0.0, 1.0), c64(2.0, 0.0), c64(1.0, 1.0), c64(0.0, -3.0));
        let lhs = a.mul(&b).det();
        let rhs = a.det() * b.det();
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn sigma3_power_inverts_cleanly() {
        let f = c64(0.3, -0.8);
        let p = Mat2::sigma3_power(f).mul(&Mat2::sigma3_power(1.0 / f));
        assert!(p.sub(&Mat2::identity()).max_abs() < 1e-15);
        assert!((Mat2::sigma3_power(f).det() - 1.0).norm() < 1e-15);
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let z = c64(0.0, 0.0);
        let m = Mat2::new(z, z, z, z);
        assert!(matches!(m.inverse(), Err(CoreError::DegenerateMatching)));
    }
}
