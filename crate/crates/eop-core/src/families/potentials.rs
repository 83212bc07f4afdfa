//! Potential evaluators: full configuration-space three-body potentials and
//! their separated radial/angular channel forms, including the rational
//! extension terms of any order.

use super::{pt_level_params, solve_params, Couplings, FamilyId, SpectralParams};
use crate::error::{EopError, Result};
use crate::geometry::{to_jacobi, xi_of_phi, z_of_phi, Config3};
use crate::specialfuncs::classical::{jacobi_coeffs, laguerre_real};
use crate::specialfuncs::poly::Var;
use num_complex::Complex64;

const RE1: Complex64 = Complex64::new(1.0, 0.0);

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Radial channel potential for one angular channel λ:
/// (3/8)ω²r² + (λ²−1/4)/r² + rational extension of order m.
pub fn radial_potential(c: &Couplings, lambda: f64, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(EopError::DomainError(format!("r > 0 violated (r = {r})")));
    }
    if !(lambda > 0.0) {
        return Err(EopError::ParameterError(format!("λ > 0 violated (λ = {lambda})")));
    }
    let conventional = 0.375 * c.omega * c.omega * r * r + (lambda * lambda - 0.25) / (r * r);
    Ok(conventional + radial_rational(c, lambda, c.m, r)?)
}

/// Rational extension of the radial oscillator at order m (0 for m = 0):
///
///   −2mω̃ − (3ω²r²/2)·L_{m−2}^{(λ+1)}(−t)/D + ω̃(ω̃r²+2λ−2)·L_{m−1}^{(λ)}(−t)/D
///   + 3ω²r²·(L_{m−1}^{(λ)}(−t)/D)²,    D = L_m^{(λ−1)}(−t),  t = ω̃r²/2.
///
/// D has all-positive series coefficients for λ > 0, so the term is
/// pole-free on r > 0.
pub fn radial_rational(c: &Couplings, lambda: f64, m: usize, r: f64) -> Result<f64> {
    if m == 0 {
        return Ok(0.0);
    }
    if !(r > 0.0) {
        return Err(EopError::DomainError(format!("r > 0 violated (r = {r})")));
    }
    let wt = c.omega_tilde();
    let t = c.t_of_r(r);
    let d = laguerre_real(m as i64, lambda - 1.0, -t);
    if d <= 0.0 {
        return Err(EopError::ConstructionError(format!(
            "radial denominator not positive at r = {r} (λ = {lambda}, m = {m})"
        )));
    }
    let lm1 = laguerre_real(m as i64 - 1, lambda, -t);
    let lm2 = laguerre_real(m as i64 - 2, lambda + 1.0, -t);
    let w2r2 = c.omega * c.omega * r * r;
    let ratio = lm1 / d;
    Ok(-2.0 * m as f64 * wt - 1.5 * w2r2 * lm2 / d
        + wt * (wt * r * r + 2.0 * lambda - 2.0) * ratio
        + 3.0 * w2r2 * ratio * ratio)
}

/// Closed form of the first-order radial rational term,
/// (3a·r² + c₁)/(3b·r² + c₂)² with a = 2ω², 3b = ω̃, c₂ = 2λ, c₁ = −8ω̃λ.
/// Identical to [`radial_rational`] at m = 1; kept as an independent
/// cross-check target.
pub fn radial_rational_first_order_closed_form(c: &Couplings, lambda: f64, r: f64) -> f64 {
    let wt = c.omega_tilde();
    let num = 6.0 * c.omega * c.omega * r * r - 8.0 * wt * lambda;
    let den = wt * r * r + 2.0 * lambda;
    num / (den * den)
}

fn check_angular_regular(family: FamilyId, phi: f64) -> Result<(f64, f64)> {
    let t = 3.0 * phi;
    let (s, co) = (t.sin(), t.cos());
    let pole = match family {
        FamilyId::Scarf | FamilyId::Pt2 | FamilyId::PtRosenMorse => co.abs() < 1e-14,
        FamilyId::Pt | FamilyId::PtEckart => s.abs() < 1e-14,
    } || (family == FamilyId::Pt2 && s.abs() < 1e-14);
    if pole {
        return Err(EopError::DomainError(format!(
            "φ = {phi} is a singularity of the {family} conventional potential"
        )));
    }
    Ok((s, co))
}

/// Conventional (non-rational) part of the angular channel potential, the
/// coefficient of 1/r² in the separated problem.  Complex for the
/// PT-symmetric families.  Evaluates anywhere off the trigonometric poles;
/// sector membership is enforced by [`angular_potential`].
pub fn angular_conventional(
    family: FamilyId,
    sp: &SpectralParams,
    c: &Couplings,
    phi: f64,
) -> Result<Complex64> {
    let (s, co) = check_angular_regular(family, phi)?;
    let g = c.g;
    let f1 = c.f1;
    Ok(match family {
        FamilyId::Scarf => re((4.5 * g - 4.5 * f1 * s) / (co * co)),
        FamilyId::Pt2 => re(4.5 * g / (co * co) + 4.5 * f1 / (s * s)),
        FamilyId::Pt => re((4.5 * g - 4.5 * f1 * co) / (s * s)),
        FamilyId::PtRosenMorse => {
            let a = sp.cap_a;
            re(a * (a + 3.0) / (co * co)) - Complex64::new(0.0, 2.0 * sp.cap_b) * (s / co)
        }
        FamilyId::PtEckart => {
            let a = sp.cap_a;
            re(a * (a - 3.0) / (s * s)) + Complex64::new(0.0, 2.0 * sp.cap_b) * (co / s)
        }
    })
}

/// Rational part of the angular channel potential at extension order p, in
/// the canonical general-order form.  Complex for the PT families.
pub fn angular_rational(
    family: FamilyId,
    sp: &SpectralParams,
    p: usize,
    phi: f64,
) -> Result<Complex64> {
    check_angular_regular(family, phi)?;
    if p < 1 {
        return Err(EopError::ParameterError("p >= 1 violated".into()));
    }
    match family {
        FamilyId::Scarf | FamilyId::Pt2 | FamilyId::Pt => {
            let (a, b) = sp.jacobi_pair();
            let z = z_of_phi(family, phi).re;
            let s = family.angular_scale();
            Ok(re(s * s * unit_jacobi_rational(a, b, p, z)?))
        }
        FamilyId::PtRosenMorse | FamilyId::PtEckart => {
            let z = z_of_phi(family, phi);
            pt_canonical_rational(sp, p, z)
        }
    }
}

/// Rational term of the unit-interval Jacobi problem:
///
///   U₂(z) = −2pκ − κ(a+b+(a−b+1)z)·N/D + (κ²/2)(1−z²)·(N/D)²,
///
/// κ = a−b−p+1, N = P_{p−1}^{(−a,b)}, D = P_p^{(−a−1,b−1)}.
pub(crate) fn unit_jacobi_rational(a: f64, b: f64, p: usize, z: f64) -> Result<f64> {
    let kappa = a - b - p as f64 + 1.0;
    let den_poly = jacobi_coeffs(p, re(-a - 1.0), re(b - 1.0), Var::Z);
    let num_poly = jacobi_coeffs(p - 1, re(-a), re(b), Var::Z);
    let den = den_poly.eval_real(z).re;
    let scale = den_poly.coeffs.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
    if den.abs() <= 1e-13 * scale.max(1.0) {
        return Err(EopError::DomainError(format!(
            "rational-term denominator vanishes at z = {z} (p = {p})"
        )));
    }
    let ratio = num_poly.eval_real(z).re / den;
    Ok(-2.0 * p as f64 * kappa - kappa * (a + b + (a - b + 1.0) * z) * ratio
        + 0.5 * kappa * kappa * (1.0 - z * z) * ratio * ratio)
}

/// Canonical rational term of the complex families, written in the mapped
/// variable z (i·cot3φ for Eckart, i·tan3φ for Rosen–Morse, where 1−z² is
/// cosec²3φ resp. sec²3φ):
///
///   V = −18(1−z²)·[ 2z·q̇/q − (1−z²)·(q̈/q − (q̇/q)²) − p ],
///
/// with q = P_p^{(α_p, β_p)} at the order-p level parameters.
pub(crate) fn pt_canonical_rational(
    sp: &SpectralParams,
    p: usize,
    z: Complex64,
) -> Result<Complex64> {
    let (ap, bp) = pt_level_params(sp, p)?;
    let q = jacobi_coeffs(p, re(ap), re(bp), Var::Z);
    let qv = q.eval(z);
    let scale = q.coeffs.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
    if qv.norm() <= 1e-13 * scale.max(1.0) * z.norm().max(1.0).powi(p as i32) {
        return Err(EopError::DomainError(format!(
            "rational-term denominator q_{p} vanishes at z = {z}"
        )));
    }
    let q1 = q.derivative().eval(z);
    let q2 = q.derivative().derivative().eval(z);
    let r1 = q1 / qv;
    let chi = RE1 - z * z;
    Ok(-18.0 * chi * (2.0 * z * r1 - chi * (q2 / qv - r1 * r1) - re(p as f64)))
}

/// First-order (p = 1) rational term in its two-term display form
/// δ·[k₁/(k₂+k₃ξ) ∓ k₄/(k₂+k₃ξ)²] (− for the real families, + for the
/// complex ones).  For the real families this equals the canonical form
/// exactly; for the complex families it differs from the canonical form by a
/// constant (absorbed into the eigenvalue), which the tests pin.
pub fn first_order_angular_rational(
    family: FamilyId,
    sp: &SpectralParams,
    phi: f64,
) -> Result<Complex64> {
    check_angular_regular(family, phi)?;
    let xi = xi_of_phi(family, phi);
    let den = sp.k2 + sp.k3 * xi;
    if den.norm() < 1e-13 {
        return Err(EopError::DomainError("two-term denominator vanishes".into()));
    }
    let sign = if family.is_complex() { 1.0 } else { -1.0 };
    Ok(sp.delta * (sp.k1 / den + sign * sp.k4 / (den * den)))
}

/// Full angular channel potential W(φ) = conventional + rational, the
/// operator potential of −Φ″ + W(φ)Φ = λ²Φ.  Enforces the family's open
/// sector.
pub fn angular_potential(
    family: FamilyId,
    sp: &SpectralParams,
    c: &Couplings,
    p: usize,
    phi: f64,
) -> Result<Complex64> {
    let (lo, hi) = family.angular_domain();
    if !(phi > lo && phi < hi) {
        return Err(EopError::DomainError(format!(
            "φ = {phi} outside the open sector ({lo}, {hi}) of {family}"
        )));
    }
    Ok(angular_conventional(family, sp, c, phi)? + angular_rational(family, sp, p, phi)?)
}

/// Full configuration-space three-body potential, evaluated directly from
/// particle coordinates (pair terms) plus the separated rational terms
/// (functions of r and φ alone).  The radial rational term is parameterized
/// by the angular channel constant λ of the channel under study.
pub fn threebody_potential(
    family: FamilyId,
    c: &Couplings,
    cfg: Config3,
    lambda: f64,
) -> Result<Complex64> {
    cfg.require_distinct()?;
    let j = to_jacobi(cfg)?;
    let (d12, d23, d31) = cfg.differences();
    let (s12, s23, s31) = cfg.two_against_one();
    let r = j.r;
    let r2 = r * r;

    let vh = c.omega * c.omega / 8.0 * (d12 * d12 + d23 * d23 + d31 * d31);

    let inv2 = |x: f64, what: &str| -> Result<f64> {
        if x == 0.0 {
            Err(EopError::SingularConfiguration(format!("{what} vanishes")))
        } else {
            Ok(1.0 / (x * x))
        }
    };
    let pair_inverse_square = inv2(d12, "x1-x2")? + inv2(d23, "x2-x3")? + inv2(d31, "x3-x1")?;
    let three_inverse_square =
        inv2(s12, "x1+x2-2x3")? + inv2(s23, "x2+x3-2x1")? + inv2(s31, "x3+x1-2x2")?;

    let body: Complex64 = match family {
        FamilyId::Scarf => {
            // Pair-breaking term with coefficient 3f₁/(√2 r).
            let mix = d12 / (s12 * s12) + d23 / (s23 * s23) + d31 / (s31 * s31);
            re(3.0 * c.g * three_inverse_square
                + 3.0 * c.f1 / (std::f64::consts::SQRT_2 * r) * mix)
        }
        FamilyId::Pt2 => re(3.0 * c.g * three_inverse_square + c.f1 * pair_inverse_square),
        FamilyId::Pt => {
            let mix = s12 / (d12 * d12) + s23 / (d23 * d23) + s31 / (d31 * d31);
            re(c.g * pair_inverse_square - c.f1 / (6.0_f64.sqrt() * r) * mix)
        }
        FamilyId::PtRosenMorse => {
            let mix = d12 / s12 + d23 / s23 + d31 / s31;
            re(3.0 * c.g * three_inverse_square)
                - Complex64::new(0.0, 3.0 * 3.0_f64.sqrt() / (2.0 * r2) * c.f1) * mix
        }
        FamilyId::PtEckart => {
            let mix = s12 / d12 + s23 / d23 + s31 / d31;
            re(c.g * pair_inverse_square)
                + Complex64::new(0.0, 3.0_f64.sqrt() / (2.0 * r2) * c.f1) * mix
        }
    };

    let sp = solve_params(family, c)?;
    let v_rad = radial_rational(c, lambda, c.m, r)?;
    let v_ang = angular_rational(family, &sp, c.p, j.phi)?;
    Ok(re(vh + v_rad) + body + v_ang / r2)
}

/// Relative separability residual
/// |V₃(cfg) − (3/8)ω²r² − V_rad,rational(r) − W(φ)/r²| / max(1, |V₃|).
pub fn separability_check(
    family: FamilyId,
    c: &Couplings,
    cfg: Config3,
    lambda: f64,
) -> Result<f64> {
    let v3 = threebody_potential(family, c, cfg, lambda)?;
    let j = to_jacobi(cfg)?;
    let sp = solve_params(family, c)?;
    let radial =
        0.375 * c.omega * c.omega * j.r * j.r + radial_rational(c, lambda, c.m, j.r)?;
    let angular = angular_conventional(family, &sp, c, j.phi)?
        + angular_rational(family, &sp, c.p, j.phi)?;
    let sep = re(radial) + angular / (j.r * j.r);
    Ok((v3 - sep).norm() / v3.norm().max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn couplings(g: f64, f1: f64, m: usize, p: usize) -> Couplings {
        Couplings::new(1.0, g, f1, m, p).unwrap()
    }

    #[test]
    fn harmonic_term_worked_value() {
        // Pure pair-harmonic at (1,0,−1), ω = 2: (4/8)(1+1+4) = 3.
        let c = Couplings::new(2.0, 4.0, 0.0, 0, 1).unwrap();
        let cfg = Config3::new(1.0, 0.0, -1.0);
        // Scarf with g = f₁ = 0 reduces to the harmonic term alone at m=0
        // only if the rational angular part vanishes; evaluate V_H directly.
        let (d12, d23, d31) = cfg.differences();
        let vh = c.omega * c.omega / 8.0 * (d12 * d12 + d23 * d23 + d31 * d31);
        assert_relative_eq!(vh, 3.0, max_relative = 1e-15);
    }

    #[test]
    fn eckart_pair_breaking_term_vanishes_at_symmetric_point() {
        // Σ (x_i+x_j−2x_k)/(x_i−x_j) = 3/1 + (−3)/1 + 0/(−2) = 0 at (1,0,−1).
        let cfg = Config3::new(1.0, 0.0, -1.0);
        let (d12, d23, d31) = cfg.differences();
        let (s12, s23, s31) = cfg.two_against_one();
        let mix = s12 / d12 + s23 / d23 + s31 / d31;
        assert!(mix.abs() < 1e-14);
    }

    #[test]
    fn radial_first_order_closed_form_matches_general() {
        let c = couplings(4.0, 0.0, 1, 1);
        let lambda = 6.0;
        for k in 1..60 {
            let r = 0.2 * k as f64;
            let general = radial_rational(&c, lambda, 1, r).unwrap();
            let closed = radial_rational_first_order_closed_form(&c, lambda, r);
            assert_relative_eq!(general, closed, max_relative = 1e-10, epsilon = 1e-12);
        }
    }

    #[test]
    fn radial_first_order_worked_value() {
        // m=1, ω=1, λ=6, r=1: (6 − 48√(3/2)) / (√(3/2) + 12)².
        let c = couplings(4.0, 0.0, 1, 1);
        let wt = (1.5_f64).sqrt();
        let expected = (6.0 - 48.0 * wt) / (wt + 12.0).powi(2);
        assert_relative_eq!(
            radial_rational(&c, 6.0, 1, 1.0).unwrap(),
            expected,
            max_relative = 1e-12
        );
    }

    #[test]
    fn unextended_radial_potential() {
        let c = couplings(4.0, 0.0, 0, 1);
        let v = radial_potential(&c, 6.0, 2.0).unwrap();
        assert_relative_eq!(v, 0.375 * 4.0 + (36.0 - 0.25) / 4.0, max_relative = 1e-14);
        assert!(radial_potential(&c, 6.0, 0.0).is_err());
        assert!(radial_potential(&c, -1.0, 1.0).is_err());
    }

    #[test]
    fn scarf_symmetric_rational_term_vanishes() {
        // A = 6, B = 0 (g=4, f₁=0): at p = 1 the deformation parameter
        // κ = α−β−p+1 = 0 and the whole rational term is zero.
        let c = couplings(4.0, 0.0, 1, 1);
        let sp = solve_params(FamilyId::Scarf, &c).unwrap();
        for k in 1..20 {
            let phi = -PI / 6.0 + k as f64 * (PI / 3.0) / 20.0;
            let v = angular_rational(FamilyId::Scarf, &sp, 1, phi).unwrap();
            assert!(v.norm() < 1e-12, "nonzero rational term {v} at φ = {phi}");
        }
        // Conventional part at φ = 0 equals A(A−3)+B² = 18.
        let w = angular_conventional(FamilyId::Scarf, &sp, &c, 0.0).unwrap();
        assert_relative_eq!(w.re, 18.0, max_relative = 1e-14);
        assert_eq!(w.im, 0.0);
    }

    #[test]
    fn pt2_equal_couplings_make_rational_term_vanish() {
        // f₁ = g gives α = β, κ = 0 at p = 1: conventional part only.
        let c = couplings(3.0, 3.0, 1, 1);
        let sp = solve_params(FamilyId::Pt2, &c).unwrap();
        let phi = PI / 15.0;
        let v = angular_rational(FamilyId::Pt2, &sp, 1, phi).unwrap();
        assert!(v.norm() < 1e-12);
        let w = angular_conventional(FamilyId::Pt2, &sp, &c, phi).unwrap();
        let t = 3.0 * phi;
        let expected = 4.5 * 3.0 * (1.0 / (t.cos() * t.cos()) + 1.0 / (t.sin() * t.sin()));
        assert_relative_eq!(w.re, expected, max_relative = 1e-13);
    }

    #[test]
    fn real_families_two_term_equals_canonical_at_first_order() {
        for (family, g, f1) in [
            (FamilyId::Scarf, 4.0, 1.0),
            (FamilyId::Pt2, 4.0, 2.0),
            (FamilyId::Pt, 4.0, 1.0),
        ] {
            let c = couplings(g, f1, 1, 1);
            let sp = solve_params(family, &c).unwrap();
            let (lo, hi) = family.angular_domain();
            for k in 1..40 {
                let phi = lo + (hi - lo) * k as f64 / 40.0;
                if (3.0 * phi).cos().abs() < 1e-3 || (3.0 * phi).sin().abs() < 1e-3 {
                    continue;
                }
                let canonical = angular_rational(family, &sp, 1, phi).unwrap();
                let two_term = first_order_angular_rational(family, &sp, phi).unwrap();
                assert_relative_eq!(canonical.re, two_term.re, max_relative = 1e-9, epsilon = 1e-9);
                assert!(canonical.im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn complex_families_two_term_differs_from_canonical_by_a_constant() {
        // canonical − two-term = 18·(c₃²−B²)/c₃² with c₃ the level map's
        // quadratic Casimir; the constant is absorbed into the eigenvalue.
        for (family, f1) in [(FamilyId::PtEckart, 1.0), (FamilyId::PtRosenMorse, 1.0)] {
            let c = couplings(4.0, f1, 1, 1);
            let sp = solve_params(family, &c).unwrap();
            let (ca, cb) = match family {
                FamilyId::PtEckart => (sp.cap_a * (sp.cap_a - 3.0), sp.cap_b),
                _ => ((sp.cap_a + 3.0) * sp.cap_a, sp.cap_b),
            };
            let expected = 18.0 * (ca * ca - cb * cb) / (ca * ca);
            let (lo, hi) = family.angular_domain();
            let mut checked = 0;
            for k in 1..40 {
                let phi = lo + (hi - lo) * k as f64 / 40.0;
                if (3.0 * phi).cos().abs() < 1e-2 || (3.0 * phi).sin().abs() < 1e-2 {
                    continue;
                }
                let canonical = angular_rational(family, &sp, 1, phi).unwrap();
                let two_term = first_order_angular_rational(family, &sp, phi).unwrap();
                let diff = canonical - two_term;
                assert_relative_eq!(diff.re, expected, max_relative = 1e-8);
                assert!(diff.im.abs() < 1e-8 * expected.abs());
                checked += 1;
            }
            assert!(checked > 20);
        }
    }

    #[test]
    fn separability_spot_checks() {
        // One nondegenerate configuration per family; full random sweeps run
        // in the integration suite.
        let cfg = Config3::new(0.9, 0.1, -0.6);
        let lambda = 5.3;
        for (family, g, f1) in [
            (FamilyId::Scarf, 4.0, 1.0),
            (FamilyId::Pt2, 4.0, 2.0),
            (FamilyId::Pt, 4.0, 1.0),
            (FamilyId::PtRosenMorse, 4.0, 1.0),
            (FamilyId::PtEckart, 4.0, 1.0),
        ] {
            let c = couplings(g, f1, 1, 1);
            let res = separability_check(family, &c, cfg, lambda).unwrap();
            assert!(res <= 1e-9, "{family}: separability residual {res}");
        }
    }

    #[test]
    fn separability_propagates_degenerate_configurations() {
        let c = couplings(4.0, 1.0, 1, 1);
        assert!(separability_check(FamilyId::Scarf, &c, Config3::new(1.0, 1.0, 0.0), 5.0).is_err());
    }

    #[test]
    fn pt_families_become_real_as_f1_vanishes() {
        // With f₁ = 0 both complex families have real potentials wherever
        // they are defined.
        for family in [FamilyId::PtRosenMorse, FamilyId::PtEckart] {
            let c = couplings(4.0, 0.0, 0, 1);
            let sp = solve_params(family, &c).unwrap();
            let (lo, hi) = family.angular_domain();
            for k in 1..30 {
                let phi = lo + (hi - lo) * k as f64 / 30.0;
                if (3.0 * phi).cos().abs() < 1e-2 || (3.0 * phi).sin().abs() < 1e-2 {
                    continue;
                }
                let w = angular_conventional(family, &sp, &c, phi).unwrap();
                assert!(w.im.abs() < 1e-12, "{family} conventional imag {w:?}");
                if let Ok(v) = angular_rational(family, &sp, 1, phi) {
                    assert!(v.im.abs() < 1e-10, "{family} rational imag {v:?}");
                }
            }
        }
    }

    #[test]
    fn pt_symmetry_under_sector_reflection() {
        // Conjugating and reflecting the sector (φ → −φ for the tan-based
        // well, φ → π/3−φ for the cot-based well) leaves the full angular
        // potential invariant.
        let c = couplings(4.0, 1.0, 1, 1);
        for (family, reflect) in [
            (FamilyId::PtRosenMorse, (|phi: f64| -phi) as fn(f64) -> f64),
            (FamilyId::PtEckart, (|phi: f64| PI / 3.0 - phi) as fn(f64) -> f64),
        ] {
            let sp = solve_params(family, &c).unwrap();
            let (lo, hi) = family.angular_domain();
            for k in 1..24 {
                let phi = lo + (hi - lo) * k as f64 / 25.0;
                if (3.0 * phi).cos().abs() < 1e-2 || (3.0 * phi).sin().abs() < 1e-2 {
                    continue;
                }
                let v = angular_conventional(family, &sp, &c, phi).unwrap()
                    + angular_rational(family, &sp, 1, phi).unwrap();
                let vr = angular_conventional(family, &sp, &c, reflect(phi)).unwrap()
                    + angular_rational(family, &sp, 1, reflect(phi)).unwrap();
                let diff = (v - vr.conj()).norm();
                assert!(diff <= 1e-9 * v.norm().max(1.0), "{family} PT residual {diff}");
            }
        }
    }
}
