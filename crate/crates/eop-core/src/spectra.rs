//! Closed-form spectra and bound-state eigenfunctions.
//!
//! The full three-body eigenfunction separates as ψ = (R(r)/√r)·Φ(φ) in the
//! planar polar coordinates of [`crate::geometry`].  The radial factor solves
//! a rationally extended oscillator problem whose energies are
//! E_{nℓ} = ω̃ (2n + λ_ℓ + 1) with ω̃ = √(3/2) ω, and the angular factor
//! solves a rationally extended trigonometric problem with eigenvalue λ_ℓ².
//!
//! Both factors are exceptional-orthogonal-polynomial bound states: a
//! polynomial numerator (built in [`crate::specialfuncs`]) over a nodeless
//! polynomial denominator, times a closed-form prefactor.  The two complex
//! (PT-symmetric) families carry complex-valued angular factors whose
//! eigenvalues λ² are nevertheless real; several published closed forms for
//! that ladder circulate, so the λ² formula is exposed as an explicit
//! [`LambdaSqForm`] variant with a per-family default.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{EopError, Result};
use crate::families::{pt_level_params, solve_params, Couplings, FamilyId, SpectralParams};
use crate::geometry::{to_jacobi, z_of_phi, Config3};
use crate::numverify::tolerances::NORMALIZATION_RELTOL;
use crate::numverify::{quadrature, GridSpec};
use crate::specialfuncs::eop::{
    angular_denominator, angular_denominator_zero_scan, imaginary_axis_zero_scan,
    radial_denominator, radial_denominator_positive, xm_laguerre_numerator, xp_jacobi_numerator,
};
use crate::specialfuncs::{jacobi_coeffs, y_poly_coeffs, PolynomialRep, Var};

/// Quantum numbers of a bound state: radial excitation `n` and angular level `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub n: usize,
    pub ell: usize,
}

impl QuantumNumbers {
    pub fn new(n: usize, ell: usize) -> Self {
        Self { n, ell }
    }
}

/// Closed-form candidates for the angular eigenvalue λ_ℓ² of the complex
/// families.  The published closed forms disagree between a linear-in-X and a
/// quadratic-in-X leading term (Eckart-type well) and between an ascending
/// and a descending ladder (Rosen–Morse-type well); the numerical residual
/// check adjudicates.  X denotes A/3 − 1 + ℓ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaSqForm {
    /// Eckart-type: λ² = 9X − B²/(9X²)  (as printed in some sources).
    LinearMinus,
    /// Eckart-type: λ² = 9X² − B²/(9X²).
    QuadraticMinus,
    /// Eckart-type: λ² = 9X² + B²/(9X²).  Default: survives the residual check.
    QuadraticPlus,
    /// Rosen–Morse-type: λ² = (A + 3 − 3ℓ)² + B²/(A + 3 − 3ℓ)²  (as printed in
    /// some sources; decreases with ℓ).
    DescendingLadder,
    /// Rosen–Morse-type: λ² = (A + 3ℓ)² + B²/(A + 3ℓ)².  Default: survives the
    /// residual check.
    AscendingLadder,
}

impl std::fmt::Display for LambdaSqForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            LambdaSqForm::LinearMinus => "linear_minus",
            LambdaSqForm::QuadraticMinus => "quadratic_minus",
            LambdaSqForm::QuadraticPlus => "quadratic_plus",
            LambdaSqForm::DescendingLadder => "descending_ladder",
            LambdaSqForm::AscendingLadder => "ascending_ladder",
        };
        f.write_str(s)
    }
}

/// The λ² form used by default for a complex family (the one that passes the
/// independent residual verification); `None` for the real families, whose λ_ℓ
/// is a single uncontested closed form.
pub fn default_lambda_form(family: FamilyId) -> Option<LambdaSqForm> {
    match family {
        FamilyId::PtEckart => Some(LambdaSqForm::QuadraticPlus),
        FamilyId::PtRosenMorse => Some(LambdaSqForm::AscendingLadder),
        _ => None,
    }
}

/// All λ² candidate forms applicable to a complex family, default first.
pub fn lambda_forms(family: FamilyId) -> &'static [LambdaSqForm] {
    match family {
        FamilyId::PtEckart => &[
            LambdaSqForm::QuadraticPlus,
            LambdaSqForm::QuadraticMinus,
            LambdaSqForm::LinearMinus,
        ],
        FamilyId::PtRosenMorse => &[
            LambdaSqForm::AscendingLadder,
            LambdaSqForm::DescendingLadder,
        ],
        _ => &[],
    }
}

/// Evaluate one λ² candidate form for a complex family at angular level `ell`.
pub fn lambda_sq_variant(
    family: FamilyId,
    sp: &SpectralParams,
    ell: usize,
    form: LambdaSqForm,
) -> Result<f64> {
    let ellf = ell as f64;
    match family {
        FamilyId::PtEckart => {
            let (at, _) = sp.tilde();
            let x = at - 1.0 + ellf;
            if x.abs() < 1e-12 {
                return Err(EopError::ParameterError(format!(
                    "A/3 - 1 + ell vanishes at ell = {ell}; lambda^2 undefined"
                )));
            }
            let bsq_term = sp.cap_b * sp.cap_b / (9.0 * x * x);
            match form {
                LambdaSqForm::LinearMinus => Ok(9.0 * x - bsq_term),
                LambdaSqForm::QuadraticMinus => Ok(9.0 * x * x - bsq_term),
                LambdaSqForm::QuadraticPlus => Ok(9.0 * x * x + bsq_term),
                _ => Err(EopError::ParameterError(format!(
                    "lambda^2 form {form} does not apply to {}",
                    family.name()
                ))),
            }
        }
        FamilyId::PtRosenMorse => {
            let rung = match form {
                LambdaSqForm::AscendingLadder => sp.cap_a + 3.0 * ellf,
                LambdaSqForm::DescendingLadder => sp.cap_a + 3.0 - 3.0 * ellf,
                _ => {
                    return Err(EopError::ParameterError(format!(
                        "lambda^2 form {form} does not apply to {}",
                        family.name()
                    )))
                }
            };
            if rung.abs() < 1e-12 {
                return Err(EopError::ParameterError(format!(
                    "ladder rung vanishes at ell = {ell}; lambda^2 undefined"
                )));
            }
            Ok(rung * rung + sp.cap_b * sp.cap_b / (rung * rung))
        }
        _ => Err(EopError::ParameterError(
            "lambda^2 candidate forms exist only for the complex families".into(),
        )),
    }
}

/// The angular channel constant λ_ℓ (> 0) feeding the radial problem.
///
/// Real families have a single linear-in-ℓ ladder; complex families use the
/// square root of the default [`LambdaSqForm`].
pub fn lambda_ell(family: FamilyId, sp: &SpectralParams, ell: usize) -> Result<f64> {
    let ellf = ell as f64;
    let lam = match family {
        FamilyId::Scarf => sp.cap_a + 3.0 * ellf,
        FamilyId::Pt2 => 3.0 * (sp.alpha + sp.beta + 1.0 + 2.0 * ellf),
        FamilyId::Pt => 3.0 * (0.5 * (sp.alpha + sp.beta + 1.0) + ellf),
        FamilyId::PtEckart | FamilyId::PtRosenMorse => {
            let form = default_lambda_form(family).expect("complex family has a default form");
            let lsq = lambda_sq_variant(family, sp, ell, form)?;
            if lsq <= 0.0 {
                return Err(EopError::OutOfRange(format!(
                    "lambda^2 = {lsq:.6e} is not positive at ell = {ell}; real analytic levels \
                     require |f1| < 4(A/3 - 1 + ell)"
                )));
            }
            lsq.sqrt()
        }
    };
    if lam <= 0.0 {
        return Err(EopError::OutOfRange(format!(
            "lambda = {lam:.6e} is not positive at ell = {ell}"
        )));
    }
    Ok(lam)
}

/// Bound-state energy E_{nℓ} = ω̃ (2n + λ_ℓ + 1), ω̃ = √(3/2) ω (ħ = 2m = 1).
pub fn energy(c: &Couplings, qn: QuantumNumbers, lambda_ell: f64) -> Result<f64> {
    if !(lambda_ell > 0.0) || !lambda_ell.is_finite() {
        return Err(EopError::OutOfRange(format!(
            "energy requires a positive channel constant, got lambda = {lambda_ell}"
        )));
    }
    Ok(c.omega_tilde() * (2.0 * qn.n as f64 + lambda_ell + 1.0))
}

/// One angular level rejected by the validity scan, with the reason.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelExclusion {
    pub ell: usize,
    pub reason: String,
}

/// Result of scanning angular levels ℓ = 0..=[`VALIDITY_SCAN_MAX_ELL`] for a
/// (family, couplings) pair: which levels host genuine bound states and which
/// are excluded (with reasons), e.g. the exceptional index gap ℓ = p of the
/// complex families.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidityInfo {
    pub valid: Vec<usize>,
    pub excluded: Vec<LevelExclusion>,
}

impl ValidityInfo {
    pub fn is_valid(&self, ell: usize) -> bool {
        self.valid.contains(&ell)
    }

    pub fn exclusion_reason(&self, ell: usize) -> Option<&str> {
        self.excluded
            .iter()
            .find(|e| e.ell == ell)
            .map(|e| e.reason.as_str())
    }
}

/// Highest angular level covered by [`angular_validity`].
pub const VALIDITY_SCAN_MAX_ELL: usize = 32;

type ValidityKey = (u8, u64, u64, u64, usize, usize);

fn validity_cache() -> &'static Mutex<HashMap<ValidityKey, ValidityInfo>> {
    static CACHE: OnceLock<Mutex<HashMap<ValidityKey, ValidityInfo>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Scan angular levels for admissibility under the given couplings.
///
/// Coupling-level inadmissibility (a denominator polynomial with a zero on
/// the physical contour, which poisons every level) is reported as an error;
/// per-level defects (index gaps, ladder-ordering violations) are recorded as
/// exclusions.  Results are cached per (family, couplings).
pub fn angular_validity(family: FamilyId, c: &Couplings) -> Result<ValidityInfo> {
    let key: ValidityKey = (
        family as u8,
        c.omega.to_bits(),
        c.g.to_bits(),
        c.f1.to_bits(),
        c.m,
        c.p,
    );
    if let Some(info) = validity_cache().lock().unwrap().get(&key) {
        return Ok(info.clone());
    }

    let sp = solve_params(family, c)?;

    // Coupling-level admissibility: the order-p denominator polynomial must be
    // nodeless on the family's physical contour.
    if family.is_complex() {
        if c.p > 0 {
            let (ap, bp) = pt_level_params(&sp, c.p)?;
            let q = jacobi_coeffs(
                c.p,
                Complex64::new(ap, 0.0),
                Complex64::new(bp, 0.0),
                Var::Z,
            );
            imaginary_axis_zero_scan(&q)?;
        }
    } else {
        let (a, b) = sp.jacobi_pair();
        angular_denominator_zero_scan(&angular_denominator(c.p, a, b))?;
    }

    let mut valid = Vec::new();
    let mut excluded = Vec::new();
    for ell in 0..=VALIDITY_SCAN_MAX_ELL {
        match level_defect(family, &sp, c, ell) {
            None => valid.push(ell),
            Some(reason) => excluded.push(LevelExclusion { ell, reason }),
        }
    }

    let info = ValidityInfo { valid, excluded };
    validity_cache()
        .lock()
        .unwrap()
        .insert(key, info.clone());
    Ok(info)
}

/// Reason the level is not a genuine bound state, or `None` if it is.
fn level_defect(family: FamilyId, sp: &SpectralParams, c: &Couplings, ell: usize) -> Option<String> {
    if family.is_complex() {
        if c.p > 0 && ell == c.p {
            return Some(format!(
                "exceptional index gap: the bound-state polynomial vanishes identically at \
                 ell = p = {ell}"
            ));
        }
        let (at_eff, _) = match pt_tilde_effective(sp) {
            Ok(t) => t,
            Err(e) => return Some(e.to_string()),
        };
        let x = at_eff - 1.0 + ell as f64;
        if x.abs() < 1e-12 {
            return Some(format!(
                "level parameters undefined: A/3 - 1 + ell vanishes at ell = {ell}"
            ));
        }
        if x <= 0.0 {
            return Some(format!(
                "eigenfunction does not vanish at the sector walls (A/3 - 1 + ell = {x:.6} <= 0)"
            ));
        }
        if !(c.f1.abs() < 4.0 * x) {
            return Some(format!(
                "outside the reality/ordering bound |f1| < 4(A/3 - 1 + ell) = {:.6} at ell = {ell}",
                4.0 * x
            ));
        }
        match lambda_sq_variant(
            family,
            sp,
            ell,
            default_lambda_form(family).expect("complex family"),
        ) {
            Ok(lsq) if lsq > 0.0 => None,
            Ok(lsq) => Some(format!("lambda^2 = {lsq:.6e} is not positive at ell = {ell}")),
            Err(e) => Some(e.to_string()),
        }
    } else {
        match lambda_ell(family, sp, ell) {
            Ok(_) => None,
            Err(e) => Some(e.to_string()),
        }
    }
}

/// Effective (A/3, B/9) entering the complex families' level structure: the
/// Rosen–Morse well maps onto the Eckart one with A → A + 3, B → −B.
fn pt_tilde_effective(sp: &SpectralParams) -> Result<(f64, f64)> {
    match sp.family {
        FamilyId::PtEckart => Ok(sp.tilde()),
        FamilyId::PtRosenMorse => Ok(((sp.cap_a + 3.0) / 3.0, -sp.cap_b / 9.0)),
        _ => Err(EopError::ParameterError(
            "effective level parameters exist only for the complex families".into(),
        )),
    }
}

/// Radial bound-state factor R_n(r) ∝ r^{λ+1/2} e^{−ω̃r²/4} Q(t)/D(t),
/// t = ω̃r²/2, with Q the order-(n+m) exceptional numerator and
/// D(t) = L_m^{(λ−1)}(−t) the nodeless denominator (classical L_n^{(λ)} when
/// m = 0).  Unit-normalized on (0, ∞) after [`RadialWavefunction::normalize`].
#[derive(Debug, Clone)]
pub struct RadialWavefunction {
    c: Couplings,
    lambda: f64,
    n: usize,
    numer: PolynomialRep,
    denom: PolynomialRep,
    norm: f64,
}

impl RadialWavefunction {
    pub fn new(c: &Couplings, lambda: f64, n: usize) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(EopError::OutOfRange(format!(
                "radial factor requires lambda > 0, got {lambda}"
            )));
        }
        radial_denominator_positive(c.m, lambda)?;
        let numer = xm_laguerre_numerator(n, c.m, lambda)?;
        let denom = radial_denominator(c.m, lambda);
        Ok(Self {
            c: *c,
            lambda,
            n,
            numer,
            denom,
            norm: 1.0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Evaluate R(r) for r > 0.  The prefactor is assembled in log space so
    /// large λ or r cannot overflow before the Gaussian damping acts.
    pub fn eval(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) || !r.is_finite() {
            return Err(EopError::DomainError(format!(
                "radial factor is defined for r > 0, got r = {r}"
            )));
        }
        let t = self.c.t_of_r(r);
        let q = self.numer.eval_real(t).re;
        let d = self.denom.eval_real(t).re;
        let log_pref = (self.lambda + 0.5) * r.ln() - 0.5 * t;
        Ok(log_pref.exp() * q / d / self.norm)
    }

    /// Fix the scale so ∫₀^∞ R(r)² dr = 1 (the tail beyond the Gaussian
    /// cutoff radius is below working precision and is dropped).
    pub fn normalize(&mut self) -> Result<()> {
        let rmax = GridSpec::radial_rmax(self.c.omega);
        let this = &*self;
        let norm_sq = quadrature(
            |r| {
                let v = this.eval(r)?;
                Ok(Complex64::new(v * v, 0.0))
            },
            0.0,
            rmax,
            NORMALIZATION_RELTOL,
        )?
        .re;
        if !(norm_sq > 0.0) || !norm_sq.is_finite() {
            return Err(EopError::NullFunction);
        }
        self.norm *= norm_sq.sqrt();
        Ok(())
    }
}

/// Evaluate the radial bound-state factor once.  For bulk evaluation build a
/// [`RadialWavefunction`] and reuse it.
pub fn radial_wavefunction(c: &Couplings, lambda: f64, n: usize, r: f64) -> Result<f64> {
    RadialWavefunction::new(c, lambda, n)?.eval(r)
}

#[derive(Debug, Clone)]
enum AngularBody {
    /// Real families: Φ = (1−z)^u (1+z)^v Q(z)/D(z) with z real in (−1, 1).
    Real {
        u: f64,
        v: f64,
        numer: PolynomialRep,
        denom: PolynomialRep,
    },
    /// Complex families: Φ = (1−z)^{α_ℓ/2} (1+z)^{β_ℓ/2} y(z)/q_p(z) with z on
    /// the imaginary axis; the power prefactor is assembled from smooth
    /// per-family logarithms so no branch-cut crossing can occur inside the
    /// sector.
    Complex {
        alpha_l: f64,
        beta_l: f64,
        numer: PolynomialRep,
        denom: PolynomialRep,
    },
}

/// Angular bound-state factor Φ_ℓ(φ) on the family's open sector.  Real
/// families yield a real-valued factor (returned with zero imaginary part);
/// the PT-symmetric families yield genuinely complex values.  Evaluation
/// outside the open sector is an error — the factor is not silently wrapped.
#[derive(Debug, Clone)]
pub struct AngularWavefunction {
    family: FamilyId,
    ell: usize,
    p: usize,
    body: AngularBody,
    norm: f64,
}

impl AngularWavefunction {
    pub fn new(family: FamilyId, sp: &SpectralParams, ell: usize, p: usize) -> Result<Self> {
        let body = if family.is_complex() {
            let (cap_a_eff, cap_b_eff) = match family {
                FamilyId::PtEckart => (sp.cap_a, sp.cap_b),
                FamilyId::PtRosenMorse => (sp.cap_a + 3.0, -sp.cap_b),
                _ => unreachable!(),
            };
            let (numer, denom) = if p == 0 {
                let (al, bl) = pt_level_params(sp, ell)?;
                let numer = jacobi_coeffs(
                    ell,
                    Complex64::new(al, 0.0),
                    Complex64::new(bl, 0.0),
                    Var::Z,
                );
                (numer, PolynomialRep::one(Var::Z))
            } else {
                let numer = y_poly_coeffs(ell, p, cap_a_eff, cap_b_eff)?;
                if numer.is_zero() {
                    return Err(EopError::OutOfRange(format!(
                        "missing level: exceptional index gap at ell = p = {p}"
                    )));
                }
                let (ap, bp) = pt_level_params(sp, p)?;
                let denom = jacobi_coeffs(
                    p,
                    Complex64::new(ap, 0.0),
                    Complex64::new(bp, 0.0),
                    Var::Z,
                );
                imaginary_axis_zero_scan(&denom)?;
                (numer, denom)
            };
            let (al, bl) = pt_level_params(sp, ell)?;
            AngularBody::Complex {
                alpha_l: al,
                beta_l: bl,
                numer,
                denom,
            }
        } else {
            let (a, b) = sp.jacobi_pair();
            let numer = xp_jacobi_numerator(ell, p, a, b)?;
            let denom = angular_denominator(p, a, b);
            angular_denominator_zero_scan(&denom)?;
            AngularBody::Real {
                u: 0.5 * a + 0.25,
                v: 0.5 * b + 0.25,
                numer,
                denom,
            }
        };
        Ok(Self {
            family,
            ell,
            p,
            body,
            norm: 1.0,
        })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn extension_order(&self) -> usize {
        self.p
    }

    fn check_sector(&self, phi: f64) -> Result<()> {
        let (lo, hi) = self.family.angular_domain();
        if !(phi > lo && phi < hi) {
            return Err(EopError::DomainError(format!(
                "phi = {phi:.12} lies outside the open sector ({lo:.12}, {hi:.12}) of the {} \
                 family; angular factors are not silently wrapped",
                self.family.name()
            )));
        }
        Ok(())
    }

    pub fn eval(&self, phi: f64) -> Result<Complex64> {
        self.check_sector(phi)?;
        let t3 = 3.0 * phi;
        match &self.body {
            AngularBody::Real {
                u,
                v,
                numer,
                denom,
            } => {
                let z = z_of_phi(self.family, phi).re;
                let q = numer.eval_real(z).re;
                let d = denom.eval_real(z).re;
                let pref = (1.0 - z).powf(*u) * (1.0 + z).powf(*v);
                Ok(Complex64::new(pref * q / d / self.norm, 0.0))
            }
            AngularBody::Complex {
                alpha_l,
                beta_l,
                numer,
                denom,
            } => {
                let z = z_of_phi(self.family, phi);
                // Smooth logarithms of (1 ∓ z) on the sector:
                //   Eckart  (z = i·cot 3φ): 1−z = e^{i(3φ−π/2)}/sin 3φ,
                //                           1+z = e^{i(π/2−3φ)}/sin 3φ;
                //   R–M     (z = i·tan 3φ): 1−z = e^{−3iφ}/cos 3φ,
                //                           1+z = e^{3iφ}/cos 3φ.
                let (log1, log2) = match self.family {
                    FamilyId::PtEckart => {
                        let lm = -t3.sin().ln();
                        (
                            Complex64::new(lm, t3 - std::f64::consts::FRAC_PI_2),
                            Complex64::new(lm, std::f64::consts::FRAC_PI_2 - t3),
                        )
                    }
                    FamilyId::PtRosenMorse => {
                        let lm = -t3.cos().ln();
                        (Complex64::new(lm, -t3), Complex64::new(lm, t3))
                    }
                    _ => unreachable!(),
                };
                let pref = (0.5 * alpha_l * log1 + 0.5 * beta_l * log2).exp();
                let q = numer.eval(z);
                let d = denom.eval(z);
                if d.norm() == 0.0 {
                    return Err(EopError::SingularConfiguration(format!(
                        "angular denominator vanished at phi = {phi:.12}"
                    )));
                }
                Ok(pref * q / d / self.norm)
            }
        }
    }

    /// Fix the scale so ∫ |Φ(φ)|² dφ = 1 over the open sector.
    pub fn normalize(&mut self) -> Result<()> {
        let (lo, hi) = self.family.angular_domain();
        let this = &*self;
        let norm_sq = quadrature(
            |phi| {
                let v = this.eval(phi)?;
                Ok(Complex64::new(v.norm_sqr(), 0.0))
            },
            lo,
            hi,
            NORMALIZATION_RELTOL,
        )?
        .re;
        if !(norm_sq > 0.0) || !norm_sq.is_finite() {
            return Err(EopError::NullFunction);
        }
        self.norm *= norm_sq.sqrt();
        Ok(())
    }
}

/// Evaluate the angular bound-state factor once.  For bulk evaluation build an
/// [`AngularWavefunction`] and reuse it.
pub fn angular_wavefunction(
    family: FamilyId,
    sp: &SpectralParams,
    ell: usize,
    p: usize,
    phi: f64,
) -> Result<Complex64> {
    AngularWavefunction::new(family, sp, ell, p)?.eval(phi)
}

/// A complete normalized bound state: quantum numbers, channel constant,
/// energy, and both separated factors.
#[derive(Debug, Clone)]
pub struct Eigenfunction {
    pub family: FamilyId,
    pub couplings: Couplings,
    pub qn: QuantumNumbers,
    pub lambda: f64,
    pub energy: f64,
    radial: RadialWavefunction,
    angular: AngularWavefunction,
}

impl Eigenfunction {
    /// Build and unit-normalize the bound state (n, ℓ).  Fails with the scan's
    /// reason when ℓ is excluded (index gap, ordering bound, wall behavior) or
    /// when the couplings are inadmissible at extension orders (m, p).
    pub fn new(family: FamilyId, c: &Couplings, qn: QuantumNumbers) -> Result<Self> {
        let sp = solve_params(family, c)?;
        let validity = angular_validity(family, c)?;
        if let Some(reason) = validity.exclusion_reason(qn.ell) {
            return Err(EopError::OutOfRange(format!(
                "angular level ell = {} is excluded: {reason}",
                qn.ell
            )));
        }
        if !validity.is_valid(qn.ell) {
            return Err(EopError::OutOfRange(format!(
                "angular level ell = {} exceeds the validity scan range 0..={}",
                qn.ell, VALIDITY_SCAN_MAX_ELL
            )));
        }
        let lambda = lambda_ell(family, &sp, qn.ell)?;
        let energy = energy(c, qn, lambda)?;
        let mut radial = RadialWavefunction::new(c, lambda, qn.n)?;
        radial.normalize()?;
        let mut angular = AngularWavefunction::new(family, &sp, qn.ell, c.p)?;
        angular.normalize()?;
        Ok(Self {
            family,
            couplings: *c,
            qn,
            lambda,
            energy,
            radial,
            angular,
        })
    }

    pub fn radial(&self) -> &RadialWavefunction {
        &self.radial
    }

    pub fn angular(&self) -> &AngularWavefunction {
        &self.angular
    }

    /// ψ(r, φ) = (R(r)/√r) · Φ(φ) in polar relative coordinates.
    pub fn eval_polar(&self, r: f64, phi: f64) -> Result<Complex64> {
        let rad = self.radial.eval(r)?;
        let ang = self.angular.eval(phi)?;
        Ok(ang * (rad / r.sqrt()))
    }
}

/// Evaluate the full internal wavefunction at a three-body configuration,
/// ψ = (R(r)/√r)·Φ(φ) with (r, φ) from [`to_jacobi`].  Configurations whose
/// angle falls outside the family's open sector are rejected, not wrapped.
pub fn full_wavefunction(ef: &Eigenfunction, cfg: &Config3) -> Result<Complex64> {
    let jc = to_jacobi(*cfg)?;
    ef.eval_polar(jc.r, jc.phi)
}
