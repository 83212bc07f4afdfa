//! Special functions: classical Laguerre/Jacobi polynomials with
//! complex-capable recurrences, exceptional-orthogonal-polynomial numerators
//! built by exact polynomial-ansatz nullspace solves, and the bilinear
//! Jacobi combinations used by the complex angular families.

pub mod classical;
pub mod eop;
pub mod poly;
pub mod ypoly;

pub use classical::{jacobi, jacobi_coeffs, jacobi_rp, laguerre, laguerre_real};
pub use eop::{build_eop, EOPKind, EOPSpec, OperatorCtx};
pub use poly::{PolynomialRep, Var};
pub use ypoly::{y_poly, y_poly_coeffs};
