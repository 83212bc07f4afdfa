//! Exceptional-orthogonal-polynomial numerators via polynomial-ansatz
//! nullspace solves.
//!
//! The bound-state ansatz — prefactor × Q / denominator-polynomial with the
//! closed-form energy — turns the Schrödinger equation into a polynomial
//! identity that is linear in the unknown coefficients of Q.  Collecting
//! coefficients yields a homogeneous system whose one-dimensional nullspace
//! is Q, normalized monic.  The construction is exact linear algebra on
//! coefficients and is independent of any evaluation grid.

use crate::error::{EopError, Result};
use crate::specialfuncs::classical::{jacobi_coeffs, laguerre_coeffs, laguerre_coeffs_reflected};
use crate::specialfuncs::poly::{PolynomialRep, Var};
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Which exceptional family a numerator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EOPKind {
    /// Radial problem: denominator L_m^{(λ−1)}(−t), variable t.
    XmLaguerre,
    /// Angular unit-interval problem: denominator P_p^{(−a−1,b−1)}(z),
    /// variable z.
    XpJacobi,
}

/// Specification of one exceptional polynomial: family kind, level index
/// (n or ℓ), and extension order (m or p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EOPSpec {
    pub kind: EOPKind,
    pub level: usize,
    pub ext: usize,
}

/// Operator context for the construction: the channel constant λ for the
/// radial problem or the Jacobi pair (a,b) for the angular one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OperatorCtx {
    Radial { lambda: f64 },
    Angular { a: f64, b: f64 },
}

/// Extract the unique (up to scale) nullspace vector of a real matrix.
///
/// Columns are normalized before the SVD so that widely different magnitude
/// scales across coefficient columns do not mask the kernel; the returned
/// vector is rescaled back to the original column basis.
fn nullspace_unique(mat: DMatrix<f64>, what: &str) -> Result<Vec<f64>> {
    let ncols = mat.ncols();
    let mut scales = vec![0.0f64; ncols];
    let mut scaled = mat;
    for j in 0..ncols {
        let norm = scaled.column(j).norm();
        scales[j] = if norm > 0.0 { norm } else { 1.0 };
        let mut col = scaled.column_mut(j);
        col /= scales[j];
    }
    let svd = scaled.svd(false, true);
    let sv = &svd.singular_values;
    if sv.is_empty() {
        return Err(EopError::ConstructionError(format!("{what}: empty system")));
    }
    let smax = sv.iter().cloned().fold(0.0f64, f64::max);
    let tol = (smax * 1e-9).max(1e-12);
    let nullity = sv.iter().filter(|&&s| s < tol).count() + ncols.saturating_sub(sv.len());
    if nullity != 1 {
        return Err(EopError::ConstructionError(format!(
            "{what}: nullspace dimension {nullity} (expected 1); wrong parameters or a missing level"
        )));
    }
    let (imin, _) = sv
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.partial_cmp(y.1).unwrap())
        .unwrap();
    let v_t = svd
        .v_t
        .ok_or_else(|| EopError::ConstructionError(format!("{what}: SVD factor missing")))?;
    Ok((0..ncols).map(|j| v_t[(imin, j)] / scales[j]).collect())
}

fn real_poly(p: &PolynomialRep) -> Vec<f64> {
    p.coeffs.iter().map(|c| c.re).collect()
}

/// Assemble the column of a linear polynomial map for the unit basis
/// Q = x^j, padded to `rows` coefficients.
fn pad(col: &PolynomialRep, rows: usize) -> Vec<f64> {
    let mut out = vec![0.0; rows];
    for (i, c) in col.coeffs.iter().enumerate() {
        out[i] = c.re;
    }
    out
}

fn unit_poly(var: Var, j: usize) -> PolynomialRep {
    let mut coeffs = vec![Complex64::new(0.0, 0.0); j + 1];
    coeffs[j] = Complex64::new(1.0, 0.0);
    PolynomialRep::new(var, coeffs)
}

/// Denominator of the radial rational extension, L_m^{(λ−1)}(−t), as a
/// polynomial in t.  All of its series coefficients are positive for λ > 0,
/// so it is zero-free on t > 0.
pub fn radial_denominator(m: usize, lambda: f64) -> PolynomialRep {
    laguerre_coeffs_reflected(m, Complex64::new(lambda - 1.0, 0.0), Var::T)
}

/// Check that the radial denominator is pole-free on t > 0 by coefficient
/// sign inspection (all positive suffices), falling back to a grid sweep.
pub fn radial_denominator_positive(m: usize, lambda: f64) -> Result<()> {
    let d = radial_denominator(m, lambda);
    if real_poly(&d).iter().all(|&c| c > 0.0) {
        return Ok(());
    }
    let tmax = 10.0 * (m as f64 + lambda + 1.0);
    for k in 0..=4000 {
        let t = tmax * (k as f64 + 0.5) / 4001.0;
        if d.eval_real(t).re <= 0.0 {
            return Err(EopError::ConstructionError(format!(
                "radial denominator non-positive at t = {t} (m = {m}, λ = {lambda})"
            )));
        }
    }
    Ok(())
}

/// Denominator of the angular rational extension, P_p^{(−a−1, b−1)}(z), as a
/// polynomial in z.
pub fn angular_denominator(p: usize, a: f64, b: f64) -> PolynomialRep {
    jacobi_coeffs(p, Complex64::new(-a - 1.0, 0.0), Complex64::new(b - 1.0, 0.0), Var::Z)
}

/// Scan a real-coefficient angular denominator for zeros on the open
/// interval (−1, 1); an interior zero makes the coupling/order combination
/// inadmissible (the potential has a pole inside the sector).
pub fn angular_denominator_zero_scan(den: &PolynomialRep) -> Result<()> {
    let scale = den.coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if scale == 0.0 {
        return Err(EopError::ConstructionError("zero angular denominator".into()));
    }
    let n = 4001;
    let mut prev = den.eval_real(-1.0 + 2.0 * 0.5 / n as f64).re;
    for k in 1..n {
        let z = -1.0 + 2.0 * (k as f64 + 0.5) / n as f64;
        let val = den.eval_real(z).re;
        if val == 0.0 || val.signum() != prev.signum() || val.abs() < 1e-9 * scale {
            return Err(EopError::ConstructionError(format!(
                "angular denominator vanishes near z = {z}; inadmissible coupling/order"
            )));
        }
        prev = val;
    }
    Ok(())
}

/// Scan a real-coefficient polynomial for zeros on the imaginary axis
/// (the evaluation contour of the complex angular families).  The sweep
/// covers the Cauchy root bound, beyond which no roots exist.
pub fn imaginary_axis_zero_scan(q: &PolynomialRep) -> Result<()> {
    if q.is_zero() {
        return Err(EopError::NullFunction);
    }
    let coeffs = real_poly(q);
    let lead = *coeffs.last().unwrap();
    let cauchy = 1.0
        + coeffs[..coeffs.len() - 1]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0f64, f64::max);
    let scale = coeffs.iter().map(|c| c.abs()).fold(0.0f64, f64::max);
    let dq = q.derivative();
    let n = 8000usize;
    let step = 2.0 * cauchy / n as f64;
    for k in 0..=n {
        let y = -cauchy + step * k as f64;
        let z = Complex64::new(0.0, y);
        let v = q.eval(z);
        // A root within ~2 grid steps of this contour point keeps |q| below
        // the local slope times that distance; an absolute floor catches
        // multiple roots sitting (numerically) on the contour.
        let slope_band = 2.0 * step * dq.eval(z).norm();
        if v.norm() <= slope_band.max(1e-12 * scale.max(1.0)) {
            return Err(EopError::ConstructionError(format!(
                "denominator polynomial vanishes on the evaluation contour near z = {y}i"
            )));
        }
    }
    Ok(())
}

/// Numerator Q(t) of the radial bound state: degree n+m solution of
///
///   D·[t Q″ + (λ+1−t) Q′ + (n+m) Q] = 2 D′·[t Q′ + λ Q],
///
/// D = L_m^{(λ−1)}(−t), obtained by substituting
/// R = r^{λ+1/2} e^{−t/2} Q(t)/D(t) with E = ω̃(2n+λ+1) into the radial
/// equation.  For m = 0 this degenerates to the classical L_n^{(λ)}(t).
/// Returned monic.
pub fn xm_laguerre_numerator(n: usize, m: usize, lambda: f64) -> Result<PolynomialRep> {
    if !(lambda > 0.0) {
        return Err(EopError::ParameterError(format!("λ > 0 violated (λ = {lambda})")));
    }
    if m == 0 {
        return Ok(laguerre_coeffs(n, Complex64::new(lambda, 0.0), Var::T).monic());
    }
    let deg = n + m;
    let d_poly = radial_denominator(m, lambda);
    let dp = d_poly.derivative();
    let t_poly = PolynomialRep::new(Var::T, vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]);
    // (λ+1−t)
    let lin = PolynomialRep::new(
        Var::T,
        vec![Complex64::new(lambda + 1.0, 0.0), Complex64::new(-1.0, 0.0)],
    );
    let rows = deg + m + 2;
    let mut mat = DMatrix::<f64>::zeros(rows, deg + 1);
    for j in 0..=deg {
        let q = unit_poly(Var::T, j);
        let qp = q.derivative();
        let qpp = qp.derivative();
        let bracket = t_poly
            .mul(&qpp)
            .add(&lin.mul(&qp))
            .add(&q.scale(Complex64::new(deg as f64, 0.0)));
        let rhs = dp
            .scale(Complex64::new(2.0, 0.0))
            .mul(&t_poly.mul(&qp).add(&q.scale(Complex64::new(lambda, 0.0))));
        let col = d_poly.mul(&bracket).sub(&rhs);
        for (i, v) in pad(&col, rows).into_iter().enumerate() {
            mat[(i, j)] = v;
        }
    }
    let v = nullspace_unique(mat, "radial numerator")?;
    let poly = PolynomialRep::new(Var::T, v.into_iter().map(|x| Complex64::new(x, 0.0)).collect());
    if poly.is_zero() {
        return Err(EopError::NullFunction);
    }
    Ok(poly.monic())
}

/// Numerator Q(z) of the unit-interval angular bound state at level ℓ,
/// extension order p, Jacobi pair (a,b): the polynomial solution of the
/// coefficient identity obtained by substituting
/// F = (1−z)^{a/2+1/4}(1+z)^{b/2+1/4}·Q/D, D = P_p^{(−a−1,b−1)}, with
/// μ_ℓ = (a+b+1)/2+ℓ into −(1−z²)F″ + zF′ + (U_con + U_rat)F = μ_ℓ²F.
/// Degree ℓ+p generically; when the deformation parameter κ = a−b−p+1
/// vanishes the rational term is identically zero and the kernel collapses
/// to the classical P_ℓ^{(a,b)} (times the then-constant denominator).
/// Returned monic.
pub fn xp_jacobi_numerator(ell: usize, p: usize, a: f64, b: f64) -> Result<PolynomialRep> {
    if p == 0 {
        return Ok(jacobi_coeffs(ell, Complex64::new(a, 0.0), Complex64::new(b, 0.0), Var::Z).monic());
    }
    let deg = ell + p;
    let kappa = a - b - p as f64 + 1.0;
    let mu = (a + b + 1.0) / 2.0 + ell as f64;
    let u = a / 2.0 + 0.25;
    let v = b / 2.0 + 0.25;

    let c = |x: f64| Complex64::new(x, 0.0);
    let d_poly = angular_denominator(p, a, b);
    let n_poly = jacobi_coeffs(p - 1, c(-a), c(b), Var::Z); // P_{p−1}^{(−a, b)}
    let dp = d_poly.derivative();
    let dpp = dp.derivative();
    let z_poly = PolynomialRep::new(Var::Z, vec![c(0.0), c(1.0)]);
    let chi = PolynomialRep::new(Var::Z, vec![c(1.0), c(0.0), c(-1.0)]); // 1−z²
    let w1 = PolynomialRep::new(Var::Z, vec![c(v - u), c(-(u + v))]);
    let s1s2 = PolynomialRep::new(Var::Z, vec![c(a + b), c(a - b + 1.0)]);
    // (a²−1/4)(1+z)/2 + (b²−1/4)(1−z)/2 − (2pκ+μ²)(1−z²)
    let upoly = PolynomialRep::new(Var::Z, vec![c(1.0), c(1.0)])
        .scale(c((a * a - 0.25) / 2.0))
        .add(&PolynomialRep::new(Var::Z, vec![c(1.0), c(-1.0)]).scale(c((b * b - 0.25) / 2.0)))
        .add(&chi.scale(c(-(2.0 * p as f64 * kappa + mu * mu))));

    let dd = d_poly.mul(&d_poly);
    let rows = deg + 2 * p + 4;
    let mut mat = DMatrix::<f64>::zeros(rows, deg + 1);
    for j in 0..=deg {
        let q = unit_poly(Var::Z, j);
        let qp = q.derivative();
        let qpp = qp.derivative();
        let wronsk = qp.mul(&d_poly).sub(&q.mul(&dp)); // Q′D − QD′
        // −[w₁² + 2z·w₁ − (u+v)χ]·Q·D²
        let mut t = w1
            .mul(&w1.add(&z_poly.scale(c(2.0))))
            .add(&chi.scale(c(-(u + v))))
            .mul(&q.mul(&dd))
            .scale(c(-1.0));
        // −2χ·w₁·(Q′D−QD′)·D
        t = t.add(&chi.mul(&w1).mul(&wronsk.mul(&d_poly)).scale(c(-2.0)));
        // −χ²·[Q″D² − 2Q′D′D − QD″D + 2QD′²]
        let inner = qpp
            .mul(&dd)
            .sub(&qp.mul(&dp).mul(&d_poly).scale(c(2.0)))
            .sub(&q.mul(&dpp).mul(&d_poly))
            .add(&q.mul(&dp).mul(&dp).scale(c(2.0)));
        t = t.add(&chi.mul(&chi).mul(&inner).scale(c(-1.0)));
        // + z·w₁·Q·D²  and  + z·χ·(Q′D−QD′)·D
        t = t.add(&z_poly.mul(&w1).mul(&q.mul(&dd)));
        t = t.add(&z_poly.mul(&chi).mul(&wronsk.mul(&d_poly)));
        // + Upoly·Q·D²
        t = t.add(&upoly.mul(&q.mul(&dd)));
        // − κ(a+b+(a−b+1)z)·χ·N·Q·D  and  + (κ²/2)·χ²·N²·Q
        t = t.add(&s1s2.mul(&chi).mul(&n_poly.mul(&q.mul(&d_poly))).scale(c(-kappa)));
        t = t.add(
            &chi.mul(&chi)
                .mul(&n_poly.mul(&n_poly).mul(&q))
                .scale(c(kappa * kappa / 2.0)),
        );
        for (i, val) in pad(&t, rows).into_iter().enumerate() {
            mat[(i, j)] = val;
        }
    }
    let v = nullspace_unique(mat, "angular numerator")?;
    let poly = PolynomialRep::new(Var::Z, v.into_iter().map(|x| Complex64::new(x, 0.0)).collect());
    if poly.is_zero() {
        return Err(EopError::NullFunction);
    }
    Ok(poly.monic())
}

/// Build the monic exceptional-polynomial numerator described by `spec`.
/// The construction is exact coefficient linear algebra; the result is
/// independent of any grid.
pub fn build_eop(spec: &EOPSpec, ctx: &OperatorCtx) -> Result<PolynomialRep> {
    match (spec.kind, ctx) {
        (EOPKind::XmLaguerre, OperatorCtx::Radial { lambda }) => {
            xm_laguerre_numerator(spec.level, spec.ext, *lambda)
        }
        (EOPKind::XpJacobi, OperatorCtx::Angular { a, b }) => {
            xp_jacobi_numerator(spec.level, spec.ext, *a, *b)
        }
        _ => Err(EopError::ParameterError(
            "operator context does not match polynomial kind".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn radial_first_order_ground_state_kernel() {
        // m=1, n=0, λ=6: monic Q(t) = t + 7.
        let q = xm_laguerre_numerator(0, 1, 6.0).unwrap();
        assert_eq!(q.degree(), 1);
        assert_relative_eq!(q.coeffs[0].re, 7.0, max_relative = 1e-10);
        assert_relative_eq!(q.coeffs[1].re, 1.0, max_relative = 1e-14);
    }

    #[test]
    fn radial_degrees_and_uniqueness() {
        for m in 1..=3usize {
            for n in 0..=4usize {
                let q = xm_laguerre_numerator(n, m, 6.0).unwrap();
                assert_eq!(q.degree(), n + m, "degree mismatch at n={n}, m={m}");
                assert_relative_eq!(q.leading().re, 1.0, max_relative = 1e-14);
            }
        }
    }

    #[test]
    fn radial_unextended_matches_classical_laguerre() {
        let q = xm_laguerre_numerator(2, 0, 4.0).unwrap();
        let l2 = laguerre_coeffs(2, Complex64::new(4.0, 0.0), Var::T).monic();
        for (a, b) in q.coeffs.iter().zip(&l2.coeffs) {
            assert_relative_eq!(a.re, b.re, max_relative = 1e-13);
        }
    }

    #[test]
    fn angular_first_order_kernel_closed_form() {
        // ℓ=0, p=1, generic (a,b): monic Q(z) = z + (a+b+2)/(a−b).
        let (a, b) = (1.7, 0.9);
        let q = xp_jacobi_numerator(0, 1, a, b).unwrap();
        assert_eq!(q.degree(), 1);
        assert_relative_eq!(q.coeffs[0].re, (a + b + 2.0) / (a - b), max_relative = 1e-9);
    }

    #[test]
    fn angular_degrees_generic_parameters() {
        let (a, b) = (1.7, 0.9);
        for p in 1..=3usize {
            for ell in 0..=2usize {
                let q = xp_jacobi_numerator(ell, p, a, b).unwrap();
                assert_eq!(q.degree(), ell + p, "degree mismatch at ℓ={ell}, p={p}");
            }
        }
    }

    #[test]
    fn angular_degenerate_equal_parameters_collapse_to_classical() {
        // a=b makes κ=0 at p=1: the kernel is the classical Jacobi P_ℓ.
        let a = 1.5;
        for ell in 0..=3usize {
            let q = xp_jacobi_numerator(ell, 1, a, a).unwrap();
            assert_eq!(q.degree(), ell);
            let classical =
                jacobi_coeffs(ell, Complex64::new(a, 0.0), Complex64::new(a, 0.0), Var::Z).monic();
            for (x, y) in q.coeffs.iter().zip(&classical.coeffs) {
                assert_relative_eq!(x.re, y.re, max_relative = 1e-9, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn radial_denominator_positivity() {
        for m in 0..=4usize {
            radial_denominator_positive(m, 6.0).unwrap();
            radial_denominator_positive(m, 0.7).unwrap();
        }
    }

    #[test]
    fn angular_zero_scan_flags_interior_pole() {
        // The second-order denominator with these parameters has a zero
        // inside (−1,1): the combination is inadmissible.
        let alpha = 0.5 * (1.0f64 + 2.0 * 1.0).sqrt(); // weaker wall
        let beta = 0.5 * (1.0f64 + 2.0 * 4.0).sqrt();
        let den = angular_denominator(2, alpha, beta);
        assert!(angular_denominator_zero_scan(&den).is_err());
        // While a stronger wall keeps it zero-free.
        let alpha_ok = 0.5 * (1.0f64 + 2.0 * 2.0).sqrt();
        let den_ok = angular_denominator(2, alpha_ok, beta);
        angular_denominator_zero_scan(&den_ok).unwrap();
    }

    #[test]
    fn imaginary_axis_scan_flags_contour_zero() {
        // A polynomial with a root at z = 0 lies on the contour.
        let q = PolynomialRep::new(
            Var::Z,
            vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        );
        assert!(imaginary_axis_zero_scan(&q).is_err());
        // z² + 1 has roots ±i, also on the contour.
        let q2 = PolynomialRep::new(
            Var::Z,
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
            ],
        );
        assert!(imaginary_axis_zero_scan(&q2).is_err());
        // z² + z + 1 has roots off the axis.
        let q3 = PolynomialRep::new(
            Var::Z,
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(1.0, 0.0),
            ],
        );
        imaginary_axis_zero_scan(&q3).unwrap();
    }

    #[test]
    fn build_eop_dispatch_and_mismatch() {
        let spec = EOPSpec { kind: EOPKind::XmLaguerre, level: 0, ext: 1 };
        build_eop(&spec, &OperatorCtx::Radial { lambda: 6.0 }).unwrap();
        assert!(build_eop(&spec, &OperatorCtx::Angular { a: 1.0, b: 2.0 }).is_err());
    }
}
