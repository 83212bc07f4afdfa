//! Independent numerical verification: grid discretization of the separated
//! radial and angular problems, a symmetric tridiagonal eigensolver,
//! residual norms against analytic eigenpairs, and adaptive quadrature.
//! Everything here is deliberately independent of the closed-form
//! construction it checks.

pub mod fd;
pub mod quad;
pub mod spectrum;
pub mod tolerances;
pub mod tridiag;

pub use fd::{discretize, residual, residual_with, Tridiag};
pub use quad::quadrature;
pub use spectrum::{spectrum_match, spectrum_match_with, Channel, LevelMatch, SpectrumReport};
pub use tridiag::eigen_tridiag;

use crate::error::{EopError, Result};

/// Uniform grid with Dirichlet boundaries for second-order central
/// differences.  Interior points are x_i = lo + (i+1)h, i = 0..npoints,
/// h = (hi−lo)/(npoints+1); the endpoints carry the (eliminated) Dirichlet
/// rows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub npoints: usize,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, npoints: usize) -> Result<Self> {
        if !(lo < hi) {
            return Err(EopError::GridError {
                x: lo,
                detail: format!("lo < hi violated (lo = {lo}, hi = {hi})"),
            });
        }
        if npoints < 64 {
            return Err(EopError::GridError {
                x: lo,
                detail: format!("npoints ≥ 64 violated (npoints = {npoints})"),
            });
        }
        Ok(GridSpec { lo, hi, npoints })
    }

    /// Radial grid: the origin is regularized at lo ≥ 1e−4 (the r^{λ+1/2}
    /// prefactor enforces the inner zero).
    pub fn new_radial(lo: f64, hi: f64, npoints: usize) -> Result<Self> {
        if lo < 1e-4 {
            return Err(EopError::GridError {
                x: lo,
                detail: format!("radial grids require lo ≥ 1e−4 (lo = {lo})"),
            });
        }
        Self::new(lo, hi, npoints)
    }

    /// Default outer radius: the Gaussian weight e^{−ω̃r²/2} falls below
    /// 1e−18 well inside r_max = √(4·41/ω̃); truncation error is below the
    /// eigensolver tolerance.
    pub fn radial_rmax(omega: f64) -> f64 {
        let omega_tilde = (1.5f64).sqrt() * omega;
        (4.0 * 41.0 / omega_tilde).sqrt()
    }

    /// Grid step h = (hi−lo)/(npoints+1).
    pub fn h(&self) -> f64 {
        (self.hi - self.lo) / (self.npoints as f64 + 1.0)
    }

    /// i-th interior point, 0-based.
    pub fn point(&self, i: usize) -> f64 {
        self.lo + (i as f64 + 1.0) * self.h()
    }

    /// All interior points.
    pub fn points(&self) -> Vec<f64> {
        (0..self.npoints).map(|i| self.point(i)).collect()
    }
}

/// One numeric eigenpair: eigenvalue and the eigenvector samples on the
/// interior grid points, normalized in the discrete L² norm.
#[derive(Debug, Clone)]
pub struct Eigenpair {
    pub value: f64,
    pub samples: Vec<f64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_invariants() {
        assert!(GridSpec::new(0.0, 1.0, 63).is_err());
        assert!(GridSpec::new(1.0, 1.0, 128).is_err());
        assert!(GridSpec::new_radial(1e-5, 1.0, 128).is_err());
        let g = GridSpec::new(0.0, 1.0, 99).unwrap();
        assert!((g.h() - 0.01).abs() < 1e-15);
        assert!((g.point(0) - 0.01).abs() < 1e-15);
        assert!((g.point(98) - 0.99).abs() < 1e-15);
        assert_eq!(g.points().len(), 99);
    }

    #[test]
    fn radial_rmax_heuristic() {
        let rmax = GridSpec::radial_rmax(1.0);
        let omega_tilde = (1.5f64).sqrt();
        // Gaussian factor at r_max is far below 1e−18.
        assert!((-omega_tilde * rmax * rmax / 2.0).exp() < 1e-18);
        assert!((rmax - 11.571751780614164).abs() < 1e-12);
    }
}
