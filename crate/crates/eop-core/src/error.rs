//! Error type shared by every module.
//!
//! Variants carry enough context to name the violated precondition in user
//! output; the CLI maps them onto its exit-code contract.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, EopError>;

/// All failure modes of construction, evaluation and verification.
#[derive(Debug, Clone, Error)]
pub enum EopError {
    /// All three particle coordinates coincide; the radial coordinate
    /// vanishes and no angle is defined.
    #[error("degenerate configuration: all three coordinates coincide (r = 0)")]
    DegenerateConfiguration,

    /// A configuration-space denominator vanished (two coordinates equal, or
    /// a symmetric combination hitting zero).
    #[error("singular configuration: {0}")]
    SingularConfiguration(String),

    /// An evaluation point lies outside the valid domain (angular sector,
    /// positive radius, pole of a map, …).
    #[error("domain error: {0}")]
    DomainError(String),

    /// Couplings or derived parameters violate a stated inequality; the
    /// message names the violated bound.
    #[error("parameter error: {0}")]
    ParameterError(String),

    /// The polynomial-ansatz linear system did not have a one-dimensional
    /// kernel (wrong parameters, inadmissible couplings or a missing level).
    #[error("construction error: {0}")]
    ConstructionError(String),

    /// A quantum number lies outside the computed validity range.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// A grid sample of the potential was not finite.
    #[error("grid error: potential not finite at x = {x}: {detail}")]
    GridError { x: f64, detail: String },

    /// The eigensolver failed to converge.
    #[error("solver error: {message} (after {iterations} iterations)")]
    SolverError { message: String, iterations: usize },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature error: tolerance not reached, achieved estimate {achieved:e}")]
    QuadratureError { achieved: f64 },

    /// A residual was requested for a numerically null function.
    #[error("null-function error: ‖ψ‖ below 1e-300 on the grid")]
    NullFunction,

    /// Configuration or argument parsing failure (CLI usage error).
    #[error("usage error: {0}")]
    UsageError(String),

    /// Filesystem failure.
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for EopError {
    fn from(e: std::io::Error) -> Self {
        EopError::Io(e.to_string())
    }
}
