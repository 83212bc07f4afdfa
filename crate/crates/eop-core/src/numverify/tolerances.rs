//! Central tolerance configuration for the verification suite.  Every bound
//! used by the verifiers and the acceptance checks lives here, with its
//! rationale, so there is exactly one place to audit.

/// Trigonometric identity suite: max relative residual over random
/// pole-avoiding angles.
pub const IDENTITY_TOL: f64 = 1e-12;

/// Angles closer than this (radians) to the k·π/6 pole lattice are rejected
/// by the identity checker rather than evaluated.
pub const POLE_EXCLUSION_RADIANS: f64 = 1e-6;

/// Configuration-space ξ forms vs the closed trigonometric form, through
/// the coordinate map.
pub const XI_TOL: f64 = 1e-10;

/// Parameter map round-trip: (g,f₁) → (A,B) → defining conditions.
pub const PARAM_ROUNDTRIP_TOL: f64 = 1e-10;

/// Separability: relative residual of V₃ against radial + angular/r².
pub const SEPARABILITY_TOL: f64 = 1e-9;

/// Eigenvalue match, real families, 2048-point grids (second-order FD).
pub const SPECTRUM_TOL_2048: f64 = 1e-3;

/// Eigenvalue match, real families, 4096-point grids.
pub const SPECTRUM_TOL_4096: f64 = 3e-4;

/// Schrödinger residual bound for real-family analytic eigenpairs on
/// 2048-point grids.
pub const RESIDUAL_TOL_REAL: f64 = 1e-6;

/// Schrödinger residual bound for the complex families (complex stencil,
/// real analytic eigenvalue).
pub const RESIDUAL_TOL_PT: f64 = 1e-5;

/// A wrong eigenvalue (E+1) must push the residual at least this high.
pub const WRONG_E_MIN_RESIDUAL: f64 = 1e-2;

/// Perturbing E by 1% must raise the residual by at least this factor.
pub const PERTURBATION_FACTOR: f64 = 1e3;

/// Relative overlap bound for distinct-level orthogonality.
pub const ORTHOGONALITY_TOL: f64 = 1e-6;

/// Quadrature relative tolerance for orthogonality overlaps.
pub const OVERLAP_QUAD_TOL: f64 = 1e-8;

/// Quadrature relative tolerance for wavefunction normalization.
pub const NORMALIZATION_RELTOL: f64 = 1e-9;

/// Discrete eigensolver residual bound ‖Tv − μv‖/‖T‖.
pub const EIGEN_RESIDUAL_TOL: f64 = 1e-10;

/// Default central-difference order for residual(): the 2nd-order stencil's
/// own discretization error (~1e−5 at 2048 points) would mask the 1e−6
/// claims being verified, so evaluation of analytic eigenpairs defaults to
/// 4th order.  The operator *matrices* stay 2nd order.
pub const DEFAULT_RESIDUAL_ORDER: usize = 4;

/// Stencil order used by the acceptance sweeps (tightest claims).
pub const ACCEPTANCE_RESIDUAL_ORDER: usize = 8;

/// Number of extra interior points excluded adjacent to each boundary when
/// taking residual norms (beyond the stencil half-width).
pub const DEFAULT_RESIDUAL_TRIM: usize = 2;

/// Grid sizes for the standard verification passes.
pub const DEFAULT_GRID_POINTS: usize = 2048;
pub const FINE_GRID_POINTS: usize = 4096;

/// Inner radial cutoff (regularized origin).
pub const RADIAL_INNER_CUTOFF: f64 = 1e-4;
