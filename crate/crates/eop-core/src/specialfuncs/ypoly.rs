//! Bilinear Jacobi combinations for the complex angular families.
//!
//! The bound states of the complex (PT-symmetric) angular wells factor as
//! prefactor × y_{ℓ,p}(z) / q_p(z), where q_p = P_p^{(α_p,β_p)} and y is a
//! two-term bilinear combination of classical Jacobi polynomials with
//! level-dependent parameters.  The level-ℓ parameter pair is
//!
//!   α_k = −X_k + B̃/X_k,   β_k = −X_k − B̃/X_k,   X_k = Ã − 1 + k,
//!
//! with Ã = A/3 and B̃ = B/9 from the family's (A, B).

use crate::error::{EopError, Result};
use crate::specialfuncs::classical::jacobi_coeffs;
use crate::specialfuncs::poly::{PolynomialRep, Var};
use num_complex::Complex64;

/// Jacobi parameter pair of level k for the complex angular families.
pub fn level_jacobi_params(a_tilde: f64, b_tilde: f64, k: usize) -> Result<(f64, f64)> {
    let x = a_tilde - 1.0 + k as f64;
    if x.abs() < 1e-12 {
        return Err(EopError::ParameterError(format!(
            "level parameter X_{k} = Ã−1+{k} vanishes (Ã = {a_tilde})"
        )));
    }
    Ok((-x + b_tilde / x, -x - b_tilde / x))
}

fn term_coeff(k: usize, alpha: f64, beta: f64) -> Result<f64> {
    let den = 2.0 * k as f64 + alpha + beta;
    if den.abs() < 1e-12 {
        return Err(EopError::ParameterError(format!(
            "vanishing combination denominator 2·{k}+α+β"
        )));
    }
    Ok(2.0 * (k as f64 + alpha) * (k as f64 + beta) / den)
}

/// Coefficients (in z) of the bilinear combination
///
///   y_{ℓ,p} = c_ℓ · q_p · P_{ℓ−1}^{(α_ℓ,β_ℓ)} − c_p · P_{p−1}^{(α_p,β_p)} · P_ℓ^{(α_ℓ,β_ℓ)},
///
/// c_k = 2(k+α_k)(k+β_k)/(2k+α_k+β_k), with the P_{−1} ≡ 0 convention at
/// ℓ = 0.  Identically zero exactly at the excluded level ℓ = p (the
/// family's index gap); callers detect this with `is_zero`.
pub fn y_poly_coeffs(ell: usize, p: usize, cap_a: f64, cap_b: f64) -> Result<PolynomialRep> {
    let a_tilde = cap_a / 3.0;
    let b_tilde = cap_b / 9.0;
    let (al, bl) = level_jacobi_params(a_tilde, b_tilde, ell)?;
    let (ap, bp) = level_jacobi_params(a_tilde, b_tilde, p)?;
    let c = |x: f64| Complex64::new(x, 0.0);
    let q_p = jacobi_coeffs(p, c(ap), c(bp), Var::Z);
    let p_ell = jacobi_coeffs(ell, c(al), c(bl), Var::Z);
    let second = jacobi_coeffs(p - 1, c(ap), c(bp), Var::Z)
        .mul(&p_ell)
        .scale(c(term_coeff(p, ap, bp)?));
    if ell == 0 {
        return Ok(second.scale(c(-1.0)));
    }
    let first = q_p
        .mul(&jacobi_coeffs(ell - 1, c(al), c(bl), Var::Z))
        .scale(c(term_coeff(ell, al, bl)?));
    Ok(first.sub(&second))
}

/// Scalar evaluation of the bilinear combination at complex z.
pub fn y_poly(ell: usize, p: usize, cap_a: f64, cap_b: f64, z: Complex64) -> Result<Complex64> {
    Ok(y_poly_coeffs(ell, p, cap_a, cap_b)?.eval(z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // Reference well: A = 6, B = 9/4 (couplings g = 4, f₁ = 1).
    const A: f64 = 6.0;
    const B: f64 = 2.25;

    #[test]
    fn level_parameters_frozen_values() {
        // Ã = 2, B̃ = 1/4: X₁ = 2, (α₁, β₁) = (−15/8, −17/8).
        let (a1, b1) = level_jacobi_params(A / 3.0, B / 9.0, 1).unwrap();
        assert_relative_eq!(a1, -1.875, max_relative = 1e-14);
        assert_relative_eq!(b1, -2.125, max_relative = 1e-14);
        // The pair sums to −2X_k for every k.
        for k in 0..5 {
            let (ak, bk) = level_jacobi_params(A / 3.0, B / 9.0, k).unwrap();
            let x = A / 3.0 - 1.0 + k as f64;
            if k == 1 {
                // X₁ = Ã = 2 here.
                assert_relative_eq!(x, 2.0);
            }
            assert_relative_eq!(ak + bk, -2.0 * x, max_relative = 1e-13);
        }
    }

    #[test]
    fn ground_level_is_constant() {
        // ℓ=0, p=1: only the second term survives (P_{−1} ≡ 0);
        // y = −c₁·P₀^{(α₁,β₁)}·P₀^{(α₀,β₀)} = −c₁, a constant.
        let y = y_poly_coeffs(0, 1, A, B).unwrap();
        assert_eq!(y.degree(), 0);
        let (a1, b1) = level_jacobi_params(A / 3.0, B / 9.0, 1).unwrap();
        let c1 = 2.0 * (1.0 + a1) * (1.0 + b1) / (2.0 + a1 + b1);
        assert_relative_eq!(y.coeffs[0].re, -c1, max_relative = 1e-13);
    }

    #[test]
    fn excluded_level_vanishes_identically() {
        // ℓ = p is the family's index gap: y ≡ 0.
        for p in 1..=3usize {
            let y = y_poly_coeffs(p, p, A, B).unwrap();
            assert!(y.is_zero(), "y_{{{p},{p}}} should vanish identically");
        }
    }

    #[test]
    fn nonexcluded_levels_are_nonzero() {
        for p in 1..=2usize {
            for ell in 0..=4usize {
                if ell == p {
                    continue;
                }
                let y = y_poly_coeffs(ell, p, A, B).unwrap();
                assert!(!y.is_zero(), "y_{{{ell},{p}}} unexpectedly zero");
            }
        }
    }

    #[test]
    fn degenerate_level_parameter_rejected() {
        // Ã = 1 makes X₀ = 0.
        assert!(level_jacobi_params(1.0, 0.25, 0).is_err());
    }

    #[test]
    fn scalar_matches_coefficients() {
        let z = Complex64::new(0.0, 1.7);
        let direct = y_poly(2, 1, A, B, z).unwrap();
        let via = y_poly_coeffs(2, 1, A, B).unwrap().eval(z);
        assert!((direct - via).norm() < 1e-13 * via.norm().max(1.0));
    }
}
