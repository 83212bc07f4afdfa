//! Classical generalized Laguerre and Jacobi polynomials.
//!
//! Scalar evaluation uses the standard three-term recurrences (complex
//! arguments and parameters supported).  Coefficient vectors for the
//! polynomial-ansatz machinery are built separately: Laguerre through the
//! same recurrence on coefficients, Jacobi through the binomial product-sum
//! expansion, which stays well-defined at parameter combinations where the
//! recurrence's leading factor vanishes (a case actually reached by the
//! symmetric-coupling Scarf denominators).

use crate::error::{EopError, Result};
use crate::specialfuncs::poly::{PolynomialRep, Var};
use num_complex::Complex64;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Generalized Laguerre value L_n^{(α)}(x) by three-term recurrence.
///
/// Negative `n` evaluates to 0 (the L_{-1} ≡ 0 convention used where a
/// formula's index underflows at the first extension order).
pub fn laguerre(n: i64, alpha: Complex64, x: Complex64) -> Complex64 {
    if n < 0 {
        return Complex64::new(0.0, 0.0);
    }
    let mut prev = Complex64::new(0.0, 0.0); // L_{-1}
    let mut cur = ONE; // L_0
    for k in 0..n {
        let kf = k as f64;
        // (k+1) L_{k+1} = (2k+1+α−x) L_k − (k+α) L_{k−1}
        let next = ((Complex64::new(2.0 * kf + 1.0, 0.0) + alpha - x) * cur
            - (Complex64::new(kf, 0.0) + alpha) * prev)
            / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Real-argument convenience wrapper for [`laguerre`].
pub fn laguerre_real(n: i64, alpha: f64, x: f64) -> f64 {
    laguerre(n, Complex64::new(alpha, 0.0), Complex64::new(x, 0.0)).re
}

/// Jacobi value P_n^{(α,β)}(z) by three-term recurrence with the standard
/// normalization P_0 = 1.
///
/// Negative `n` evaluates to 0 (P_{-1} ≡ 0 convention).  Errors when a
/// recurrence step would divide by a vanishing leading factor
/// (pathological α+β such as α+β = −2 reached at n = 2).
pub fn jacobi(n: i64, alpha: Complex64, beta: Complex64, z: Complex64) -> Result<Complex64> {
    if n < 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if n == 0 {
        return Ok(ONE);
    }
    let p1 = (alpha - beta) * 0.5 + (alpha + beta + 2.0) * 0.5 * z;
    if n == 1 {
        return Ok(p1);
    }
    let mut prev = ONE;
    let mut cur = p1;
    for k in 2..=n {
        let kf = k as f64;
        let ab = alpha + beta;
        let c0 = 2.0 * kf * (Complex64::new(kf, 0.0) + ab) * (Complex64::new(2.0 * kf, 0.0) + ab - 2.0);
        if c0.norm() < 1e-140 {
            return Err(EopError::ParameterError(format!(
                "jacobi recurrence leading factor vanishes at n = {k} for α+β = {}",
                ab.re
            )));
        }
        let c1 = Complex64::new(2.0 * kf, 0.0) + ab - 1.0;
        let c2 = (Complex64::new(2.0 * kf, 0.0) + ab) * (Complex64::new(2.0 * kf, 0.0) + ab - 2.0);
        let c3 = alpha * alpha - beta * beta;
        let c4 = 2.0
            * (Complex64::new(kf, 0.0) + alpha - 1.0)
            * (Complex64::new(kf, 0.0) + beta - 1.0)
            * (Complex64::new(2.0 * kf, 0.0) + ab);
        let next = (c1 * (c2 * z + c3) * cur - c4 * prev) / c0;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Real-parameter convenience wrapper for [`jacobi`] at complex argument.
pub fn jacobi_rp(n: i64, alpha: f64, beta: f64, z: Complex64) -> Result<Complex64> {
    jacobi(n, Complex64::new(alpha, 0.0), Complex64::new(beta, 0.0), z)
}

/// Coefficient vector of L_n^{(α)} in the variable of `var`.
pub fn laguerre_coeffs(n: usize, alpha: Complex64, var: Var) -> PolynomialRep {
    let mut prev = PolynomialRep::zero(var); // L_{-1}
    let mut cur = PolynomialRep::one(var); // L_0
    for k in 0..n {
        let kf = k as f64;
        // (2k+1+α) L_k − x·L_k − (k+α) L_{k−1}, all over (k+1)
        let a = cur.scale(Complex64::new(2.0 * kf + 1.0, 0.0) + alpha);
        let b = cur.mul_x();
        let c = prev.scale(Complex64::new(kf, 0.0) + alpha);
        let next = a.sub(&b).sub(&c).scale(Complex64::new(1.0 / (kf + 1.0), 0.0));
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficient vector of the reflected polynomial L_n^{(α)}(−x), obtained by
/// flipping the sign of every odd-degree coefficient.
pub fn laguerre_coeffs_reflected(n: usize, alpha: Complex64, var: Var) -> PolynomialRep {
    let p = laguerre_coeffs(n, alpha, var);
    let coeffs = p
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 1 { -c } else { c })
        .collect();
    PolynomialRep::new(var, coeffs)
}

/// Binomial coefficient C(x + m, m) for possibly non-integer complex x,
/// computed as the product ∏_{j=1..m} (x + j)/j.
fn rising_binomial(x: Complex64, m: usize) -> Complex64 {
    let mut acc = ONE;
    for j in 1..=m {
        acc *= (x + Complex64::new(j as f64, 0.0)) / j as f64;
    }
    acc
}

/// Coefficient vector of P_n^{(α,β)} via the binomial product-sum expansion
///
///   P_n^{(α,β)}(z) = Σ_{s=0}^{n} C(n+α, n−s) C(n+β, s) ((z−1)/2)^s ((z+1)/2)^{n−s},
///
/// which is polynomial in (α, β) and therefore free of the removable
/// singularities the three-term recurrence has at degenerate parameter sums.
pub fn jacobi_coeffs(n: usize, alpha: Complex64, beta: Complex64, var: Var) -> PolynomialRep {
    let zm = PolynomialRep::new(var, vec![Complex64::new(-0.5, 0.0), Complex64::new(0.5, 0.0)]); // (z−1)/2
    let zp = PolynomialRep::new(var, vec![Complex64::new(0.5, 0.0), Complex64::new(0.5, 0.0)]); // (z+1)/2
    let mut acc = PolynomialRep::zero(var);
    for s in 0..=n {
        // C(n+α, n−s) = ∏_{j=1..n−s} (α + s + j)/j
        let ca = rising_binomial(alpha + Complex64::new(s as f64, 0.0), n - s);
        // C(n+β, s) = ∏_{j=1..s} (β + n − s + j)/j
        let cb = rising_binomial(beta + Complex64::new((n - s) as f64, 0.0), s);
        let mut term = PolynomialRep::one(var).scale(ca * cb);
        for _ in 0..s {
            term = term.mul(&zm);
        }
        for _ in 0..(n - s) {
            term = term.mul(&zp);
        }
        acc = acc.add(&term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn laguerre_base_cases() {
        // L_0 = 1, L_1 = 1 + α − x
        assert_relative_eq!(laguerre_real(0, 2.5, 0.7), 1.0);
        assert_relative_eq!(laguerre_real(1, 2.5, 0.7), 1.0 + 2.5 - 0.7, max_relative = 1e-15);
        assert_eq!(laguerre(-1, c(1.0), c(3.0)), c(0.0));
    }

    #[test]
    fn laguerre_degree_two_value() {
        // L_2^{(0)}(x) = (x² − 4x + 2)/2, so L_2^{(0)}(1) = −1/2.
        assert_relative_eq!(laguerre_real(2, 0.0, 1.0), -0.5, max_relative = 1e-14);
    }

    #[test]
    fn jacobi_base_cases() {
        let z = c(0.37);
        assert_eq!(jacobi(0, c(1.2), c(3.4), z).unwrap(), c(1.0));
        let p1 = jacobi(1, c(1.2), c(3.4), z).unwrap();
        assert_relative_eq!(p1.re, (1.2 - 3.4) / 2.0 + (1.2 + 3.4 + 2.0) * 0.37 / 2.0, max_relative = 1e-14);
        assert_eq!(jacobi(-1, c(1.0), c(1.0), z).unwrap(), c(0.0));
    }

    #[test]
    fn jacobi_legendre_endpoint() {
        // P_2^{(0,0)}(1) = 1 (Legendre polynomials are 1 at the right endpoint).
        let v = jacobi(2, c(0.0), c(0.0), c(1.0)).unwrap();
        assert_relative_eq!(v.re, 1.0, max_relative = 1e-14);
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn jacobi_recurrence_pathology_is_reported() {
        // α + β = −2 makes the n = 2 leading factor vanish.
        let err = jacobi(2, c(-1.0), c(-1.0), c(0.3));
        assert!(err.is_err());
    }

    #[test]
    fn coefficient_builders_match_scalar_evaluation() {
        let (alpha, beta) = (c(1.7), c(-0.4));
        for n in 0..6usize {
            let pc = jacobi_coeffs(n, alpha, beta, Var::Z);
            assert_eq!(pc.degree(), n);
            for &z in &[-0.9, -0.2, 0.1, 0.77] {
                let direct = jacobi(n as i64, alpha, beta, c(z)).unwrap();
                let via = pc.eval_real(z);
                assert_relative_eq!(via.re, direct.re, max_relative = 1e-12, epsilon = 1e-13);
            }
        }
        let a = c(5.0);
        for n in 0..6usize {
            let lc = laguerre_coeffs(n, a, Var::T);
            assert_eq!(lc.degree(), n);
            for &t in &[0.1, 1.0, 4.2] {
                let direct = laguerre(n as i64, a, c(t));
                assert_relative_eq!(lc.eval_real(t).re, direct.re, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn jacobi_coeffs_survive_recurrence_pathology() {
        // Product-sum form stays finite where the recurrence divides by zero:
        // the symmetric-parameter denominator P_1^{(−a−1, a−1)} degenerates to
        // the constant −a.
        let a = 1.5;
        let p = jacobi_coeffs(1, c(-a - 1.0), c(a - 1.0), Var::Z);
        assert_eq!(p.degree(), 0);
        assert_relative_eq!(p.eval_real(0.1).re, -a, max_relative = 1e-14);
    }

    #[test]
    fn reflected_laguerre_positivity() {
        // L_m^{(α)}(−t) has all-positive coefficients for α > −1, hence is
        // positive for every t > 0 — the denominator-safety property of the
        // radial rational terms.
        for m in 1..=4usize {
            let p = laguerre_coeffs_reflected(m, c(5.0), Var::T);
            assert!(p.coeffs.iter().all(|co| co.re > 0.0));
            for k in 0..200 {
                let t = 0.05 + 0.1 * k as f64;
                assert!(p.eval_real(t).re > 0.0);
            }
        }
    }
}
