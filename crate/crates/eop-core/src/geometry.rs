//! Jacobi/polar coordinates for three particles on a line, the
//! pair-difference trigonometric identities, and the per-family ξ maps that
//! collapse a three-body configuration to one angle.

use crate::error::{EopError, Result};
use crate::families::FamilyId;
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

const SQRT2: f64 = std::f64::consts::SQRT_2;
const TWO_THIRDS_PI: f64 = 2.0 * PI / 3.0;

/// Positions of the three particles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Config3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Config3 {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Config3 { x1, x2, x3 }
    }

    /// Pairwise differences (x1−x2, x2−x3, x3−x1), directly from coordinates.
    pub fn differences(&self) -> (f64, f64, f64) {
        (self.x1 - self.x2, self.x2 - self.x3, self.x3 - self.x1)
    }

    /// The symmetric combinations (x1+x2−2x3, x2+x3−2x1, x3+x1−2x2).
    pub fn two_against_one(&self) -> (f64, f64, f64) {
        (
            self.x1 + self.x2 - 2.0 * self.x3,
            self.x2 + self.x3 - 2.0 * self.x1,
            self.x3 + self.x1 - 2.0 * self.x2,
        )
    }

    /// Error unless all three coordinates are pairwise distinct.
    pub fn require_distinct(&self) -> Result<()> {
        let (d12, d23, d31) = self.differences();
        if d12 == 0.0 || d23 == 0.0 || d31 == 0.0 {
            return Err(EopError::SingularConfiguration(
                "two particle coordinates coincide".into(),
            ));
        }
        Ok(())
    }
}

/// Center-of-mass, hyper-radius and sector angle of a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JacobiCoords {
    /// Center of mass (x1+x2+x3)/3.
    pub r_cm: f64,
    /// Hyper-radius, r² = (1/3) Σ_{i<j} (x_i−x_j)².
    pub r: f64,
    /// Sector angle in (−π, π].
    pub phi: f64,
}

/// Map particle coordinates to (center-of-mass, r, φ).
///
/// The relative coordinates are x = (x1−x2)/√2 and y = (x1+x2−2x3)/√6, with
/// x = r sinφ, y = r cosφ and φ = atan2(x, y) on the principal branch
/// (−π, π].  Sector membership for a given potential family is checked by
/// the family evaluators, not here.
pub fn to_jacobi(c: Config3) -> Result<JacobiCoords> {
    let r_cm = (c.x1 + c.x2 + c.x3) / 3.0;
    let x = (c.x1 - c.x2) / SQRT2;
    let y = (c.x1 + c.x2 - 2.0 * c.x3) / 6.0_f64.sqrt();
    let r = x.hypot(y);
    if r < 1e-150 {
        return Err(EopError::DegenerateConfiguration);
    }
    let phi = x.atan2(y);
    Ok(JacobiCoords { r_cm, r, phi })
}

/// Pairwise differences reconstructed from (r, φ):
/// (x1−x2, x2−x3, x3−x1) = √2·r·(sinφ, sin(φ+2π/3), sin(φ+4π/3)).
pub fn pair_differences(j: JacobiCoords) -> (f64, f64, f64) {
    let s = SQRT2 * j.r;
    (
        s * j.phi.sin(),
        s * (j.phi + TWO_THIRDS_PI).sin(),
        s * (j.phi + 2.0 * TWO_THIRDS_PI).sin(),
    )
}

/// The two-against-one combinations reconstructed from (r, φ):
/// (x1+x2−2x3, x2+x3−2x1, x3+x1−2x2) = √6·r·(cosφ, cos(φ+2π/3), cos(φ+4π/3)).
pub fn pair_sums(j: JacobiCoords) -> (f64, f64, f64) {
    let s = 6.0_f64.sqrt() * j.r;
    (
        s * j.phi.cos(),
        s * (j.phi + TWO_THIRDS_PI).cos(),
        s * (j.phi + 2.0 * TWO_THIRDS_PI).cos(),
    )
}

fn nonzero(v: f64, what: &str) -> Result<f64> {
    if v == 0.0 || !v.is_finite() {
        Err(EopError::SingularConfiguration(format!("{what} vanishes or is not finite")))
    } else {
        Ok(v)
    }
}

/// All configuration-space forms of ξ available for a family, evaluated
/// directly from the particle coordinates (no angular variables).
///
/// Two algebraically different forms exist for the Scarf family and for both
/// real Pöschl–Teller families; their agreement is part of the verification
/// suite.  The first entry is the primary form returned by [`xi`].
pub fn xi_forms(family: FamilyId, c: Config3) -> Result<Vec<f64>> {
    c.require_distinct()?;
    let j = to_jacobi(c)?;
    let (d12, d23, d31) = c.differences();
    let (s12, s23, s31) = c.two_against_one();
    let r = j.r;
    match family {
        FamilyId::Scarf => {
            // ξ = 4(x1−x2)(x2−x3)(x3−x1) / (2√2 r³)
            let f1 = 4.0 * d12 * d23 * d31 / (2.0 * SQRT2 * r.powi(3));
            // ξ = −(3/(√2 r)) · [Σ 1/(x_i−x_j)]⁻¹
            let inv_sum = nonzero(1.0 / d12 + 1.0 / d23 + 1.0 / d31, "sum of inverse differences")?;
            let f2 = -(3.0 / (SQRT2 * r)) / inv_sum;
            Ok(vec![f1, f2])
        }
        FamilyId::Pt2 => {
            // ξ = (9/(6r²)) · [Σ 1/(x_i+x_j−2x_k)]⁻²
            let inv_sum = nonzero(
                1.0 / nonzero(s12, "x1+x2-2x3")? + 1.0 / nonzero(s23, "x2+x3-2x1")?
                    + 1.0 / nonzero(s31, "x3+x1-2x2")?,
                "sum of inverse two-against-one combinations",
            )?;
            let f1 = 9.0 / (6.0 * r * r) / (inv_sum * inv_sum);
            // ξ = (4/(6√6))² · (1/r⁶) · [Π (x_i+x_j−2x_k)]²
            let prod = s12 * s23 * s31;
            let coeff = 4.0 / (6.0 * 6.0_f64.sqrt());
            let f2 = coeff * coeff / r.powi(6) * prod * prod;
            Ok(vec![f1, f2])
        }
        FamilyId::Pt => {
            // ξ = (3/√6)(1/r) · [Σ 1/(x_i+x_j−2x_k)]⁻¹
            let inv_sum = nonzero(
                1.0 / nonzero(s12, "x1+x2-2x3")? + 1.0 / nonzero(s23, "x2+x3-2x1")?
                    + 1.0 / nonzero(s31, "x3+x1-2x2")?,
                "sum of inverse two-against-one combinations",
            )?;
            let f1 = 3.0 / (6.0_f64.sqrt() * r) / inv_sum;
            // ξ = −4/(6√6 r³) · Π (x_i+x_j−2x_k)
            let f2 = -4.0 / (6.0 * 6.0_f64.sqrt() * r.powi(3)) * (s12 * s23 * s31);
            Ok(vec![f1, f2])
        }
        FamilyId::PtRosenMorse => {
            // ξ = (1/√3) Σ (x_i−x_j)/(x_i+x_j−2x_k), cyclic
            let v = d12 / nonzero(s12, "x1+x2-2x3")?
                + d23 / nonzero(s23, "x2+x3-2x1")?
                + d31 / nonzero(s31, "x3+x1-2x2")?;
            Ok(vec![v / 3.0_f64.sqrt()])
        }
        FamilyId::PtEckart => {
            // ξ = (1/(3√3)) Σ (x_i+x_j−2x_k)/(x_i−x_j), cyclic
            let v = s12 / d12 + s23 / d23 + s31 / d31;
            Ok(vec![v / (3.0 * 3.0_f64.sqrt())])
        }
    }
}

/// Primary configuration-space ξ for a family.
pub fn xi(family: FamilyId, c: Config3) -> Result<f64> {
    Ok(xi_forms(family, c)?[0])
}

/// ξ as a function of the sector angle alone:
/// Scarf −sin3φ, Pt2 cos²3φ, Pt −cos3φ, Rosen–Morse tan3φ, Eckart cot3φ.
pub fn xi_of_phi(family: FamilyId, phi: f64) -> f64 {
    let t = 3.0 * phi;
    match family {
        FamilyId::Scarf => -t.sin(),
        FamilyId::Pt2 => t.cos() * t.cos(),
        FamilyId::Pt => -t.cos(),
        FamilyId::PtRosenMorse => t.tan(),
        FamilyId::PtEckart => 1.0 / t.tan(),
    }
}

/// Argument z(φ) of the family's polynomial structure:
/// Scarf sin3φ, Pt2 cos6φ, Pt cos3φ, Rosen–Morse i·tan3φ, Eckart i·cot3φ.
pub fn z_of_phi(family: FamilyId, phi: f64) -> Complex64 {
    let t = 3.0 * phi;
    match family {
        FamilyId::Scarf => Complex64::new(t.sin(), 0.0),
        FamilyId::Pt2 => Complex64::new((2.0 * t).cos(), 0.0),
        FamilyId::Pt => Complex64::new(t.cos(), 0.0),
        FamilyId::PtRosenMorse => Complex64::new(0.0, t.tan()),
        FamilyId::PtEckart => Complex64::new(0.0, 1.0 / t.tan()),
    }
}

/// Angular image of the configuration map: the deformation variable ξ(φ) for
/// the real Scarf family (whose polynomial argument is −ξ) and the mapped
/// argument z = z(ξ) for the other families.
///
/// Errors when φ lies outside the family's open angular sector or at a pole
/// of the map.
pub fn xi_angular(family: FamilyId, phi: f64) -> Result<Complex64> {
    let (lo, hi) = family.angular_domain();
    if !(phi > lo && phi < hi) {
        return Err(EopError::DomainError(format!(
            "φ = {phi} outside the open sector ({lo}, {hi}) of {family:?}"
        )));
    }
    let t = 3.0 * phi;
    match family {
        FamilyId::PtRosenMorse if t.cos() == 0.0 => {
            return Err(EopError::DomainError("tan(3φ) pole".into()))
        }
        FamilyId::PtEckart if t.sin() == 0.0 => {
            return Err(EopError::DomainError("cot(3φ) pole".into()))
        }
        _ => {}
    }
    Ok(match family {
        FamilyId::Scarf => Complex64::new(xi_of_phi(family, phi), 0.0),
        _ => z_of_phi(family, phi),
    })
}

/// Residuals of the six sector-angle trigonometric identities.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    /// Relative residuals |LHS − RHS| / max(1, |RHS|) of, in order:
    /// Π sinφ_s = −(1/4)sin3φ;  Σ cosecφ_s = 3cosec3φ;  Σ sec²φ_s = 9sec²3φ;
    /// Σ secφ_s·tanφ_s = −9tan3φ·sec3φ;  Σ cosec²φ_s = 9cosec²3φ;
    /// Σ cotφ_s = 3cot3φ  (φ_s = φ + 2(s−1)π/3).
    pub residuals: [f64; 6],
}

impl IdentityReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0_f64, |a, &b| a.max(b))
    }
}

/// Minimum angular distance from φ to the singularity lattice k·π/6.
pub fn pole_distance(phi: f64) -> f64 {
    let step = PI / 6.0;
    let k = (phi / step).round();
    (phi - k * step).abs()
}

/// Exclusion radius around each pole of the identities, in radians.
pub const POLE_EXCLUSION_RADIANS: f64 = 1e-6;

/// Evaluate the six identity residuals at φ.
///
/// Every identity has poles on the lattice k·π/6; points within
/// [`POLE_EXCLUSION_RADIANS`] of the lattice are rejected so the
/// finite-precision residuals stay meaningful.
pub fn check_identities(phi: f64) -> Result<IdentityReport> {
    if pole_distance(phi) < POLE_EXCLUSION_RADIANS {
        return Err(EopError::DomainError(format!(
            "φ = {phi} is within {POLE_EXCLUSION_RADIANS} rad of an identity pole (k·π/6)"
        )));
    }
    let angles = [phi, phi + TWO_THIRDS_PI, phi + 2.0 * TWO_THIRDS_PI];
    let t = 3.0 * phi;

    let rel = |lhs: f64, rhs: f64| (lhs - rhs).abs() / rhs.abs().max(1.0);

    let prod_sin: f64 = angles.iter().map(|a| a.sin()).product();
    let sum_cosec: f64 = angles.iter().map(|a| 1.0 / a.sin()).sum();
    let sum_sec2: f64 = angles.iter().map(|a| 1.0 / (a.cos() * a.cos())).sum();
    let sum_sec_tan: f64 = angles.iter().map(|a| a.sin() / (a.cos() * a.cos())).sum();
    let sum_cosec2: f64 = angles.iter().map(|a| 1.0 / (a.sin() * a.sin())).sum();
    let sum_cot: f64 = angles.iter().map(|a| a.cos() / a.sin()).sum();

    let residuals = [
        rel(prod_sin, -0.25 * t.sin()),
        rel(sum_cosec, 3.0 / t.sin()),
        rel(sum_sec2, 9.0 / (t.cos() * t.cos())),
        rel(sum_sec_tan, -9.0 * t.sin() / (t.cos() * t.cos())),
        rel(sum_cosec2, 9.0 / (t.sin() * t.sin())),
        rel(sum_cot, 3.0 * t.cos() / t.sin()),
    ];
    Ok(IdentityReport { residuals })
}

/// Domain midpoint of a family's angular sector (a convenient regular point).
pub fn sector_midpoint(family: FamilyId) -> f64 {
    let (lo, hi) = family.angular_domain();
    0.5 * (lo + hi)
}

/// A canonical interior sample point of the sector that avoids the ξ-map
/// poles for every family (π/12 into the sector works for all five).
pub fn sector_probe(family: FamilyId) -> f64 {
    let (lo, hi) = family.angular_domain();
    // π/12 offset lands strictly inside every sector and off the k·π/6 lattice
    let p = lo + PI / 12.0;
    debug_assert!(p > lo && p < hi && p != 0.0);
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn worked_configuration() {
        // (1, 0, −1): r = √2, φ = π/6, differences (1, 1, −2), sums (3, −3, 0).
        let j = to_jacobi(Config3::new(1.0, 0.0, -1.0)).unwrap();
        assert_relative_eq!(j.r, SQRT2, max_relative = 1e-14);
        assert_relative_eq!(j.phi, PI / 6.0, max_relative = 1e-14);
        assert_relative_eq!(j.r_cm, 0.0, epsilon = 1e-15);
        let (d12, d23, d31) = pair_differences(j);
        assert_relative_eq!(d12, 1.0, max_relative = 1e-13);
        assert_relative_eq!(d23, 1.0, max_relative = 1e-13);
        assert_relative_eq!(d31, -2.0, max_relative = 1e-13);
        let (s12, s23, s31) = pair_sums(j);
        assert_relative_eq!(s12, 3.0, max_relative = 1e-13);
        assert_relative_eq!(s23, -3.0, max_relative = 1e-13);
        assert!(s31.abs() < 1e-13);
    }

    #[test]
    fn degenerate_configuration_is_an_error() {
        assert!(matches!(
            to_jacobi(Config3::new(0.7, 0.7, 0.7)),
            Err(EopError::DegenerateConfiguration)
        ));
    }

    #[test]
    fn differences_at_zero_angle() {
        let j = JacobiCoords { r_cm: 0.0, r: 1.0, phi: 0.0 };
        let (d12, d23, d31) = pair_differences(j);
        assert!(d12.abs() < 1e-15);
        assert_relative_eq!(d23, (1.5_f64).sqrt(), max_relative = 1e-14);
        assert_relative_eq!(d31, -(1.5_f64).sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn scarf_xi_worked_point() {
        // Both Scarf forms give ξ = −1 at (1, 0, −1), matching −sin(3·π/6).
        let forms = xi_forms(FamilyId::Scarf, Config3::new(1.0, 0.0, -1.0)).unwrap();
        assert_eq!(forms.len(), 2);
        assert_relative_eq!(forms[0], -1.0, max_relative = 1e-13);
        assert_relative_eq!(forms[1], -1.0, max_relative = 1e-13);
        assert_relative_eq!(xi_of_phi(FamilyId::Scarf, PI / 6.0), -1.0, max_relative = 1e-13);
    }

    #[test]
    fn angular_map_values() {
        assert_eq!(xi_angular(FamilyId::Scarf, 0.0).unwrap(), Complex64::new(0.0, 0.0));
        // Pt at φ just inside π/6... cos(3φ) continuous; exact spot value at π/6:
        let z = xi_angular(FamilyId::Pt, PI / 6.0).unwrap();
        assert!(z.re.abs() < 1e-15 && z.im == 0.0);
        let z = xi_angular(FamilyId::PtEckart, PI / 12.0).unwrap();
        assert!(z.re.abs() < 1e-15);
        assert_relative_eq!(z.im, 1.0, max_relative = 1e-14);
    }

    #[test]
    fn angular_map_domain_errors() {
        assert!(xi_angular(FamilyId::Scarf, PI / 3.0).is_err());
        assert!(xi_angular(FamilyId::PtRosenMorse, PI / 4.0).is_err());
        assert!(xi_angular(FamilyId::PtEckart, -0.01).is_err());
    }

    #[test]
    fn identity_worked_values() {
        // At φ = π/12: Σ sec²φ_s = 9 sec²(π/4) = 18.
        let phi = PI / 12.0;
        let angles = [phi, phi + TWO_THIRDS_PI, phi + 2.0 * TWO_THIRDS_PI];
        let sum_sec2: f64 = angles.iter().map(|a| 1.0 / (a.cos() * a.cos())).sum();
        assert_relative_eq!(sum_sec2, 18.0, max_relative = 1e-12);
        let rep = check_identities(phi).unwrap();
        assert!(rep.max_residual() <= 1e-12, "residuals {:?}", rep.residuals);
    }

    #[test]
    fn identity_product_at_sector_corner() {
        // Direct arithmetic at φ = π/6: sin products (1/2)(1/2)(−1) = −1/4;
        // the full identity check refuses the point (it is on the pole lattice).
        let phi = PI / 6.0;
        let angles = [phi, phi + TWO_THIRDS_PI, phi + 2.0 * TWO_THIRDS_PI];
        let prod: f64 = angles.iter().map(|a| a.sin()).product();
        assert_relative_eq!(prod, -0.25, max_relative = 1e-14);
        assert_relative_eq!(prod, -0.25 * (3.0 * phi).sin(), max_relative = 1e-14);
        assert!(check_identities(phi).is_err());
    }

    #[test]
    fn pole_exclusion_distance() {
        assert!(pole_distance(PI / 6.0) < 1e-15);
        assert!(pole_distance(PI / 12.0) > 0.19);
        assert!(check_identities(PI / 6.0 + 5e-7).is_err());
    }
}
