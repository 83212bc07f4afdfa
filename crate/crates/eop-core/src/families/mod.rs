//! The five separable three-body potential families: coupling validation,
//! the map from couplings to well parameters, and the potential evaluators
//! in configuration space and in the separated radial/angular variables.

mod potentials;

pub use potentials::{
    angular_conventional, angular_potential, angular_rational, first_order_angular_rational,
    radial_potential, radial_rational, radial_rational_first_order_closed_form,
    separability_check, threebody_potential,
};

use crate::error::{EopError, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;

/// Identifier of a potential family.
///
/// The real families are the trigonometric Scarf well and two trigonometric
/// Pöschl–Teller wells; the complex, PT-symmetric families are a
/// trigonometric Rosen–Morse well and a trigonometric Eckart well.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    Scarf,
    Pt2,
    Pt,
    PtRosenMorse,
    PtEckart,
}

impl FamilyId {
    pub const ALL: [FamilyId; 5] = [
        FamilyId::Scarf,
        FamilyId::Pt2,
        FamilyId::Pt,
        FamilyId::PtRosenMorse,
        FamilyId::PtEckart,
    ];

    /// True for the PT-symmetric complex families.
    pub fn is_complex(self) -> bool {
        matches!(self, FamilyId::PtRosenMorse | FamilyId::PtEckart)
    }

    /// Open angular sector on which the family's well lives: the maximal
    /// singularity-free interval of the conventional part containing the well.
    pub fn angular_domain(self) -> (f64, f64) {
        match self {
            FamilyId::Scarf => (-PI / 6.0, PI / 6.0),
            FamilyId::Pt2 => (0.0, PI / 6.0),
            FamilyId::Pt => (0.0, PI / 3.0),
            FamilyId::PtRosenMorse => (-PI / 6.0, PI / 6.0),
            FamilyId::PtEckart => (0.0, PI / 3.0),
        }
    }

    /// Scale s of the angular variable change: d²/dφ² = s²[(1−z²)d²/dz² − z·d/dz]
    /// for the family's z(φ).
    pub fn angular_scale(self) -> f64 {
        match self {
            FamilyId::Pt2 => 6.0,
            _ => 3.0,
        }
    }

    /// Stable lower-case name used by the CLI and in reports.
    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Scarf => "scarf",
            FamilyId::Pt2 => "pt2",
            FamilyId::Pt => "pt",
            FamilyId::PtRosenMorse => "pt-rm",
            FamilyId::PtEckart => "pt-eckart",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "scarf" => Ok(FamilyId::Scarf),
            "pt2" => Ok(FamilyId::Pt2),
            "pt" => Ok(FamilyId::Pt),
            "pt-rm" | "pt_rm" | "ptrm" | "rosen-morse" => Ok(FamilyId::PtRosenMorse),
            "pt-eckart" | "pt_eckart" | "pteckart" | "eckart" => Ok(FamilyId::PtEckart),
            other => Err(EopError::UsageError(format!(
                "unknown family '{other}' (expected scarf|pt2|pt|pt-rm|pt-eckart)"
            ))),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Model couplings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Couplings {
    /// Oscillator strength ω > 0.
    pub omega: f64,
    /// Inverse-square coupling g > −1/2 (collapse bound).
    pub g: f64,
    /// Three-body coupling f₁ (family-specific reality bounds).
    pub f1: f64,
    /// Radial extension order m ≥ 0 (0 = unextended oscillator).
    pub m: usize,
    /// Angular extension order p ≥ 1.
    pub p: usize,
}

impl Couplings {
    pub fn new(omega: f64, g: f64, f1: f64, m: usize, p: usize) -> Result<Self> {
        if !(omega > 0.0) {
            return Err(EopError::ParameterError(format!("omega > 0 violated (omega = {omega})")));
        }
        if !(g > -0.5) {
            return Err(EopError::ParameterError(format!("g > -1/2 violated (g = {g})")));
        }
        if p < 1 {
            return Err(EopError::ParameterError("p >= 1 violated".into()));
        }
        if !f1.is_finite() {
            return Err(EopError::ParameterError("f1 must be finite".into()));
        }
        Ok(Couplings { omega, g, f1, m, p })
    }

    /// ω̃ = √(3/2)·ω, the effective frequency of the separated radial channel.
    pub fn omega_tilde(&self) -> f64 {
        (1.5_f64).sqrt() * self.omega
    }

    /// t(r) = √(3/8)·ω·r², the radial polynomial variable.
    pub fn t_of_r(&self, r: f64) -> f64 {
        0.5 * self.omega_tilde() * r * r
    }
}

/// Well parameters derived from the couplings.
///
/// For the real families `alpha`/`beta` are the two prefactor exponents of
/// the angular eigenfunctions; for the complex families they hold the
/// level-0 values of the level-dependent pair (see
/// [`pt_level_params`]).  `cap_a`/`cap_b` are the conventional well-depth
/// parameters A and B; `zeta` and `small_a` are the auxiliary square roots
/// used by the Scarf and Eckart maps.  `k1…k4` and `delta` are the constants
/// of the first-order rational term in the form
/// δ·[k₁/(k₂+k₃·ξ) ± k₄/(k₂+k₃·ξ)²].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralParams {
    pub family: FamilyId,
    pub cap_a: f64,
    pub cap_b: f64,
    pub alpha: f64,
    pub beta: f64,
    pub zeta: f64,
    pub small_a: f64,
    pub delta: f64,
    pub k1: Complex64,
    pub k2: Complex64,
    pub k3: Complex64,
    pub k4: Complex64,
}

impl SpectralParams {
    /// The (a, b) pair entering the angular polynomial structure of the real
    /// families: prefactor (1−z)^{a/2+1/4}(1+z)^{b/2+1/4}, denominator
    /// P_p^{(−a−1, b−1)}.  The Pt family pairs them in swapped order.
    pub fn jacobi_pair(&self) -> (f64, f64) {
        match self.family {
            FamilyId::Pt => (self.beta, self.alpha),
            _ => (self.alpha, self.beta),
        }
    }

    /// (A/3, B/9) for the complex families.
    pub fn tilde(&self) -> (f64, f64) {
        (self.cap_a / 3.0, self.cap_b / 9.0)
    }
}

/// Per-level Jacobi parameters (α_k, β_k) of the complex families:
/// with X_k = A/3 − 1 + k, α_k = −X_k + (B/9)/X_k and β_k = −X_k − (B/9)/X_k.
///
/// The same map with k = p gives the parameters of the polynomial q_p in the
/// rational term's denominator.
pub fn pt_level_params(sp: &SpectralParams, k: usize) -> Result<(f64, f64)> {
    let (at, bt) = match sp.family {
        FamilyId::PtEckart => sp.tilde(),
        // The Rosen–Morse problem maps onto the Eckart one with A → A+3,
        // B → −B (and φ → π/6 − φ); its level parameters are the mapped ones.
        FamilyId::PtRosenMorse => ((sp.cap_a + 3.0) / 3.0, -sp.cap_b / 9.0),
        _ => {
            return Err(EopError::ParameterError(
                "per-level parameters exist only for the complex families".into(),
            ))
        }
    };
    let x = at - 1.0 + k as f64;
    if x.abs() < 1e-12 {
        return Err(EopError::ParameterError(format!(
            "A/3 - 1 + k vanishes at k = {k}; level parameters undefined"
        )));
    }
    Ok((-x + bt / x, -x - bt / x))
}

/// Derive the well parameters for a family, enforcing the reality bounds.
pub fn solve_params(family: FamilyId, c: &Couplings) -> Result<SpectralParams> {
    let g = c.g;
    let f1 = c.f1;
    let zero = Complex64::new(0.0, 0.0);
    let re = |x: f64| Complex64::new(x, 0.0);
    match family {
        FamilyId::Scarf => {
            if !(f1 < g + 0.5) {
                return Err(EopError::ParameterError(format!(
                    "f1 < g+1/2 violated (f1 = {f1}, g+1/2 = {})",
                    g + 0.5
                )));
            }
            if !(-f1 < g + 0.5) {
                return Err(EopError::ParameterError(format!(
                    "f1 > -(g+1/2) violated (f1 = {f1})"
                )));
            }
            let zeta = ((1.0 + 2.0 * g).powi(2) - 4.0 * f1 * f1).sqrt();
            let root = (2.0 * (1.0 + 2.0 * g + zeta)).sqrt();
            let cap_a = (24.0 + 12.0 * root) / 16.0;
            let cap_b = 3.0 * f1 / root;
            let alpha = 0.5 * (1.0 + 2.0 * (g - f1)).sqrt();
            let beta = 0.5 * (1.0 + 2.0 * (g + f1)).sqrt();
            let k2 = 2.0 * cap_a - 3.0;
            let k3 = 2.0 * cap_b;
            Ok(SpectralParams {
                family,
                cap_a,
                cap_b,
                alpha,
                beta,
                zeta,
                small_a: 0.0,
                delta: 9.0,
                k1: re(2.0 * k2),
                k2: re(k2),
                k3: re(k3),
                k4: re(2.0 * (k2 * k2 - k3 * k3)),
            })
        }
        FamilyId::Pt2 => {
            if !(f1 > -0.5) {
                return Err(EopError::ParameterError(format!(
                    "f1 > -1/2 violated (f1 = {f1})"
                )));
            }
            let alpha = 0.5 * (1.0 + 2.0 * f1).sqrt();
            let beta = 0.5 * (1.0 + 2.0 * g).sqrt();
            Ok(SpectralParams {
                family,
                cap_a: 0.0,
                cap_b: 0.0,
                alpha,
                beta,
                zeta: 0.0,
                small_a: 0.0,
                delta: 36.0,
                k1: re(2.0 * (beta + alpha)),
                k2: re(2.0 * beta),
                k3: re(-2.0 * (beta - alpha)),
                k4: re(2.0 * ((beta + alpha).powi(2) - (beta - alpha).powi(2))),
            })
        }
        FamilyId::Pt => {
            if !(f1 < g + 0.5) {
                return Err(EopError::ParameterError(format!(
                    "f1 < g+1/2 violated (f1 = {f1}, g+1/2 = {})",
                    g + 0.5
                )));
            }
            if !(-f1 < g + 0.5) {
                return Err(EopError::ParameterError(format!(
                    "f1 > -(g+1/2) violated (f1 = {f1})"
                )));
            }
            let alpha = (0.5 * (g + f1 + 0.5)).sqrt();
            let beta = (0.5 * (g - f1 + 0.5)).sqrt();
            // First-order rational denominator: (α+β) + (β−α)·cos3φ, i.e.
            // k₂ + k₃·ξ with ξ = −cos3φ and k₃ = α−β.
            Ok(SpectralParams {
                family,
                cap_a: 0.0,
                cap_b: 0.0,
                alpha,
                beta,
                zeta: 0.0,
                small_a: 0.0,
                delta: 9.0,
                k1: re(2.0 * (beta + alpha)),
                k2: re(beta + alpha),
                k3: re(alpha - beta),
                k4: re(2.0 * ((beta + alpha).powi(2) - (beta - alpha).powi(2))),
            })
        }
        FamilyId::PtRosenMorse => {
            let cap_a = 1.5 * ((1.0 + 2.0 * g).sqrt() - 1.0);
            let cap_b = 2.25 * f1;
            let m2 = (cap_a * cap_a * (cap_a + 3.0).powi(2) - cap_b * cap_b).powi(2);
            let c32 = cap_a * cap_a * (cap_a + 3.0).powi(2);
            let sp = SpectralParams {
                family,
                cap_a,
                cap_b,
                alpha: 0.0,
                beta: 0.0,
                zeta: 0.0,
                small_a: 0.0,
                delta: -9.0,
                k1: re(4.0 * cap_b * (c32 - cap_b * cap_b) / c32),
                k2: re(cap_b),
                k3: Complex64::new(0.0, cap_a * (cap_a + 3.0)),
                k4: re(2.0 * m2 / c32),
            };
            let (alpha, beta) = pt_level_params(&sp, 0)?;
            Ok(SpectralParams { alpha, beta, ..sp })
        }
        FamilyId::PtEckart => {
            let small_a = 0.5 * (1.0 + 2.0 * g).sqrt();
            let cap_a = 1.5 + 3.0 * small_a;
            let cap_b = 2.25 * f1;
            let c3 = cap_a * (cap_a - 3.0);
            let m = c3 * c3 - cap_b * cap_b;
            let sp = SpectralParams {
                family,
                cap_a,
                cap_b,
                alpha: 0.0,
                beta: 0.0,
                zeta: 0.0,
                small_a,
                delta: 9.0,
                k1: Complex64::new(0.0, -4.0 * cap_b * m / (c3 * c3)),
                k2: Complex64::new(0.0, cap_b),
                k3: re(c3),
                k4: re(2.0 * m * m / (c3 * c3)),
            };
            let (alpha, beta) = pt_level_params(&sp, 0)?;
            let _ = zero;
            Ok(SpectralParams { alpha, beta, ..sp })
        }
    }
}
