//! Spectrum verification: compare closed-form level ladders against an
//! independent numerical treatment of the same Schrödinger operator.
//!
//! Real-valued channels (every radial channel, and the angular channels of
//! the real families) are discretized by second-order finite differences with
//! Dirichlet walls and diagonalized; the lowest numerical eigenvalues are
//! matched level-by-level against the analytic ladder.  Missing analytic
//! levels (exceptional index gaps) and unexpected numerical levels are both
//! detected and reported, never hidden.
//!
//! The complex (PT-symmetric) angular channels have a non-Hermitian real
//! spectrum that a real symmetric discretization cannot reach, so they are
//! checked in residual mode: the closed-form eigenfunction is inserted into
//! the discretized operator and the relative residual at the analytic
//! eigenvalue must vanish to tolerance.

use serde::Serialize;

use crate::error::{EopError, Result};
use crate::families::{angular_potential, radial_potential, solve_params, Couplings, FamilyId};
use crate::numverify::fd::{discretize, residual_with};
use crate::numverify::tolerances::{
    ACCEPTANCE_RESIDUAL_ORDER, DEFAULT_GRID_POINTS, DEFAULT_RESIDUAL_TRIM, FINE_GRID_POINTS,
    RADIAL_INNER_CUTOFF, RESIDUAL_TOL_PT, SPECTRUM_TOL_2048, SPECTRUM_TOL_4096,
};
use crate::numverify::{eigen_tridiag, GridSpec};
use crate::spectra::{
    angular_validity, default_lambda_form, energy, lambda_ell, AngularWavefunction,
    QuantumNumbers,
};

/// Which separated channel to verify.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Channel {
    /// Radial channel at a fixed angular constant λ (> 0); levels are indexed
    /// by the radial quantum number n.
    Radial { lambda: f64 },
    /// Angular channel; levels are indexed by ℓ and the eigenvalue is λ_ℓ².
    Angular,
}

/// One level of the analytic/numeric comparison.
#[derive(Debug, Clone, Serialize)]
pub struct LevelMatch {
    /// Level index (n for radial channels, ℓ for angular ones).
    pub index: usize,
    /// Closed-form eigenvalue, absent when the level is excluded (e.g. the
    /// exceptional index gap ℓ = p).
    pub analytic: Option<f64>,
    /// Matched numerical eigenvalue (diagonalization mode only).
    pub numeric: Option<f64>,
    /// |numeric − analytic| / max(|analytic|, 1).
    pub rel_error: Option<f64>,
    /// Relative operator residual of the closed-form eigenfunction
    /// (residual mode only).
    pub residual: Option<f64>,
    /// True when no numerical eigenvalue matches, or no analytic level exists.
    pub missing: bool,
    /// Human-readable reason for exclusions and match failures.
    pub note: Option<String>,
}

/// Outcome of one channel verification.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub family: String,
    pub channel: String,
    /// "diagonalization" or "residual".
    pub mode: String,
    pub grid_points: usize,
    /// λ of the radial channel, if applicable.
    pub lambda: Option<f64>,
    /// λ² closed form used for complex angular channels.
    pub lambda_form: Option<String>,
    pub levels: Vec<LevelMatch>,
    /// Indices with no analytic/numeric counterpart (reported, not hidden).
    pub missing_levels: Vec<usize>,
    /// Numerical eigenvalues below or between analytic levels that match
    /// nothing — evidence of a level the closed form does not predict.
    pub extra_numeric: Vec<f64>,
    pub max_rel_error: Option<f64>,
    pub max_residual: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
}

impl SpectrumReport {
    fn finalize(mut self) -> Self {
        self.missing_levels = self
            .levels
            .iter()
            .filter(|l| l.missing)
            .map(|l| l.index)
            .collect();
        self.max_rel_error = self
            .levels
            .iter()
            .filter_map(|l| l.rel_error)
            .fold(None, |acc: Option<f64>, r| Some(acc.map_or(r, |a| a.max(r))));
        self.max_residual = self
            .levels
            .iter()
            .filter_map(|l| l.residual)
            .fold(None, |acc: Option<f64>, r| Some(acc.map_or(r, |a| a.max(r))));
        // Pass iff every analytically predicted level is reproduced within
        // tolerance and no unexplained numerical level appeared.  Excluded
        // levels (analytic = None) are reported but do not fail the check.
        let levels_ok = self.levels.iter().all(|l| match (l.analytic, self.mode.as_str()) {
            (None, _) => true,
            (Some(_), "residual") => l.residual.map_or(false, |r| r <= self.tolerance),
            (Some(_), _) => {
                !l.missing && l.rel_error.map_or(false, |r| r <= self.tolerance)
            }
        });
        self.pass = levels_ok && self.extra_numeric.is_empty();
        self
    }
}

/// Relative-match scale: guards against tiny analytic eigenvalues.
fn match_scale(a: f64) -> f64 {
    a.abs().max(1.0)
}

/// Window (relative to [`match_scale`]) within which a numerical eigenvalue is
/// considered the counterpart of an analytic level.  Far looser than the pass
/// tolerances, far tighter than the level spacing.
const MATCH_GATE: f64 = 0.05;

/// Greedy ascending match of sorted numerical eigenvalues against the
/// analytic ladder.  `analytic[i] = (index, value-or-exclusion-reason)`.
fn match_levels(
    analytic: &[(usize, std::result::Result<f64, String>)],
    numeric: &[f64],
) -> (Vec<LevelMatch>, Vec<f64>) {
    let mut levels = Vec::with_capacity(analytic.len());
    let mut extra = Vec::new();
    let mut i_num = 0usize;
    for (index, entry) in analytic {
        match entry {
            Err(reason) => levels.push(LevelMatch {
                index: *index,
                analytic: None,
                numeric: None,
                rel_error: None,
                residual: None,
                missing: true,
                note: Some(reason.clone()),
            }),
            Ok(a) => {
                let gate = MATCH_GATE * match_scale(*a);
                while i_num < numeric.len() && numeric[i_num] < a - gate {
                    extra.push(numeric[i_num]);
                    i_num += 1;
                }
                if i_num < numeric.len() && (numeric[i_num] - a).abs() <= gate {
                    let rel = (numeric[i_num] - a).abs() / match_scale(*a);
                    levels.push(LevelMatch {
                        index: *index,
                        analytic: Some(*a),
                        numeric: Some(numeric[i_num]),
                        rel_error: Some(rel),
                        residual: None,
                        missing: false,
                        note: None,
                    });
                    i_num += 1;
                } else {
                    levels.push(LevelMatch {
                        index: *index,
                        analytic: Some(*a),
                        numeric: None,
                        rel_error: None,
                        residual: None,
                        missing: true,
                        note: Some(
                            "no numerical eigenvalue within the match gate".to_string(),
                        ),
                    });
                }
            }
        }
    }
    (levels, extra)
}

fn diag_tolerance(npoints: usize) -> f64 {
    if npoints >= FINE_GRID_POINTS {
        SPECTRUM_TOL_4096
    } else {
        SPECTRUM_TOL_2048
    }
}

fn radial_match(
    family: FamilyId,
    c: &Couplings,
    lambda: f64,
    k: usize,
    npoints: usize,
) -> Result<SpectrumReport> {
    let grid = GridSpec::new_radial(
        RADIAL_INNER_CUTOFF,
        GridSpec::radial_rmax(c.omega),
        npoints,
    )?;
    let tri = discretize(|r| radial_potential(c, lambda, r), &grid)?;
    let want = (k + 2).min(grid.npoints);
    let numeric: Vec<f64> = eigen_tridiag(&tri, want)?
        .into_iter()
        .map(|p| p.value)
        .collect();
    let analytic: Vec<(usize, std::result::Result<f64, String>)> = (0..k)
        .map(|n| {
            let e = energy(c, QuantumNumbers::new(n, 0), lambda)
                .map_err(|err| err.to_string());
            (n, e)
        })
        .collect();
    let (levels, extra) = match_levels(&analytic, &numeric);
    Ok(SpectrumReport {
        family: family.name().to_string(),
        channel: "radial".to_string(),
        mode: "diagonalization".to_string(),
        grid_points: npoints,
        lambda: Some(lambda),
        lambda_form: None,
        levels,
        missing_levels: Vec::new(),
        extra_numeric: extra,
        max_rel_error: None,
        max_residual: None,
        tolerance: diag_tolerance(npoints),
        pass: false,
    }
    .finalize())
}

fn angular_diag_match(
    family: FamilyId,
    c: &Couplings,
    k: usize,
    npoints: usize,
) -> Result<SpectrumReport> {
    let sp = solve_params(family, c)?;
    let validity = angular_validity(family, c)?;
    let (lo, hi) = family.angular_domain();
    let grid = GridSpec::new(lo, hi, npoints)?;
    let tri = discretize(
        |phi| {
            let v = angular_potential(family, &sp, c, c.p, phi)?;
            if v.im.abs() > 1e-9 * (1.0 + v.re.abs()) {
                return Err(EopError::ConstructionError(format!(
                    "angular potential of {} is not real at phi = {phi}: {v}",
                    family.name()
                )));
            }
            Ok(v.re)
        },
        &grid,
    )?;
    let want = (k + 2).min(grid.npoints);
    let numeric: Vec<f64> = eigen_tridiag(&tri, want)?
        .into_iter()
        .map(|p| p.value)
        .collect();
    let analytic: Vec<(usize, std::result::Result<f64, String>)> = (0..k)
        .map(|ell| {
            let entry = match validity.exclusion_reason(ell) {
                Some(reason) => Err(reason.to_string()),
                None => lambda_ell(family, &sp, ell)
                    .map(|lam| lam * lam)
                    .map_err(|e| e.to_string()),
            };
            (ell, entry)
        })
        .collect();
    let (levels, extra) = match_levels(&analytic, &numeric);
    Ok(SpectrumReport {
        family: family.name().to_string(),
        channel: "angular".to_string(),
        mode: "diagonalization".to_string(),
        grid_points: npoints,
        lambda: None,
        lambda_form: None,
        levels,
        missing_levels: Vec::new(),
        extra_numeric: extra,
        max_rel_error: None,
        max_residual: None,
        tolerance: diag_tolerance(npoints),
        pass: false,
    }
    .finalize())
}

fn angular_residual_match(
    family: FamilyId,
    c: &Couplings,
    k: usize,
    npoints: usize,
) -> Result<SpectrumReport> {
    let sp = solve_params(family, c)?;
    let validity = angular_validity(family, c)?;
    let (lo, hi) = family.angular_domain();
    let grid = GridSpec::new(lo, hi, npoints)?;
    let potential = |phi: f64| angular_potential(family, &sp, c, c.p, phi);
    let mut levels = Vec::with_capacity(k);
    for ell in 0..k {
        if let Some(reason) = validity.exclusion_reason(ell) {
            levels.push(LevelMatch {
                index: ell,
                analytic: None,
                numeric: None,
                rel_error: None,
                residual: None,
                missing: true,
                note: Some(reason.to_string()),
            });
            continue;
        }
        let lam = lambda_ell(family, &sp, ell)?;
        let aw = AngularWavefunction::new(family, &sp, ell, c.p)?;
        let resid = residual_with(
            |phi| aw.eval(phi),
            lam * lam,
            potential,
            &grid,
            ACCEPTANCE_RESIDUAL_ORDER,
            DEFAULT_RESIDUAL_TRIM.max(npoints / 32),
        )?;
        levels.push(LevelMatch {
            index: ell,
            analytic: Some(lam * lam),
            numeric: None,
            rel_error: None,
            residual: Some(resid),
            missing: false,
            note: None,
        });
    }
    Ok(SpectrumReport {
        family: family.name().to_string(),
        channel: "angular".to_string(),
        mode: "residual".to_string(),
        grid_points: npoints,
        lambda: None,
        lambda_form: default_lambda_form(family).map(|f| f.to_string()),
        levels,
        missing_levels: Vec::new(),
        extra_numeric: Vec::new(),
        max_rel_error: None,
        max_residual: None,
        tolerance: RESIDUAL_TOL_PT,
        pass: false,
    }
    .finalize())
}

/// Verify the lowest `k` levels of a channel on the default grid.
pub fn spectrum_match(
    family: FamilyId,
    c: &Couplings,
    channel: Channel,
    k: usize,
) -> Result<SpectrumReport> {
    spectrum_match_with(family, c, channel, k, DEFAULT_GRID_POINTS)
}

/// [`spectrum_match`] with an explicit number of grid points.
pub fn spectrum_match_with(
    family: FamilyId,
    c: &Couplings,
    channel: Channel,
    k: usize,
    npoints: usize,
) -> Result<SpectrumReport> {
    if k == 0 {
        return Err(EopError::UsageError(
            "spectrum verification needs at least one level".into(),
        ));
    }
    match channel {
        Channel::Radial { lambda } => radial_match(family, c, lambda, k, npoints),
        Channel::Angular => {
            if family.is_complex() {
                angular_residual_match(family, c, k, npoints)
            } else {
                angular_diag_match(family, c, k, npoints)
            }
        }
    }
}
