//! Dense univariate polynomials with complex coefficients.
//!
//! Coefficients are stored ascending in degree.  The representation is the
//! workhorse of the exceptional-polynomial construction: coefficient vectors
//! are assembled into a linear system whose kernel is the sought polynomial,
//! so exact, allocation-light arithmetic on small degree (≲ 20) is all that
//! is needed.

use num_complex::Complex64;
use serde::Serialize;

/// Variable a polynomial is expressed in.
///
/// `T` is the scaled squared radius used by the radial channel; `Z` is the
/// mapped angular variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Var {
    /// t = √(3/8)·ω·r²
    T,
    /// z = z(φ), one of sin3φ, cos6φ, cos3φ, i·tan3φ, i·cot3φ
    Z,
}

/// Polynomial with ascending complex coefficients and a variable tag.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialRep {
    pub var: Var,
    /// Ascending coefficients; empty means the zero polynomial.
    pub coeffs: Vec<Complex64>,
}

/// Absolute size below which a trailing coefficient is treated as zero when
/// trimming.  Kernel vectors come out of an orthogonal factorization with
/// unit norm, so true zeros are ≲ 1e-14 while genuine leading coefficients
/// are O(1) after monic scaling.
const TRIM_EPS: f64 = 1e-12;

impl PolynomialRep {
    /// Build from ascending coefficients, trimming numerically-zero leading
    /// coefficients so `degree` reflects the true degree.
    pub fn new(var: Var, mut coeffs: Vec<Complex64>) -> Self {
        let max_abs = coeffs.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
        let cut = TRIM_EPS * max_abs.max(1.0);
        while let Some(last) = coeffs.last() {
            if last.norm() <= cut {
                coeffs.pop();
            } else {
                break;
            }
        }
        PolynomialRep { var, coeffs }
    }

    /// Build from real ascending coefficients.
    pub fn from_real(var: Var, coeffs: &[f64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero(var: Var) -> Self {
        PolynomialRep { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        PolynomialRep { var, coeffs: vec![Complex64::new(1.0, 0.0)] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading(&self) -> Complex64 {
        self.coeffs.last().copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a real point, returning the complex value.
    pub fn eval_real(&self, x: f64) -> Complex64 {
        self.eval(Complex64::new(x, 0.0))
    }

    /// First derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.var);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        PolynomialRep { var: self.var, coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Self::new(self.var, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var);
        }
        let mut coeffs =
            vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(self.var, coeffs)
    }

    /// Multiply by the monomial x (shift coefficients up one degree).
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        PolynomialRep { var: self.var, coeffs }
    }

    /// Rescale so the leading coefficient is exactly 1.
    pub fn monic(&self) -> Self {
        let lead = self.leading();
        if lead.norm() == 0.0 {
            return self.clone();
        }
        let mut out = self.scale(lead.inv());
        if let Some(last) = out.coeffs.last_mut() {
            *last = Complex64::new(1.0, 0.0);
        }
        out
    }

    /// True when every coefficient has negligible imaginary part.
    pub fn is_real(&self) -> bool {
        let max_abs = self.coeffs.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
        self.coeffs.iter().all(|c| c.im.abs() <= 1e-12 * max_abs.max(1.0))
    }

    /// Real parts of the coefficients (valid when `is_real`).
    pub fn real_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.re).collect()
    }
}
