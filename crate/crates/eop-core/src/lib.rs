//! Rationally extended three-body potentials on a line.
//!
//! This crate implements a family of exactly solvable one-dimensional
//! three-particle quantum models: a harmonic pair confinement plus
//! inverse-square pair and/or three-body interactions, deformed by rational
//! terms so that the eigenfunctions involve exceptional orthogonal
//! polynomials (X_m Laguerre radially, X_p Jacobi angularly) instead of the
//! classical ones.
//!
//! After a Jacobi-coordinate transformation the problem separates into a
//! radial oscillator channel and an angular channel on one sector of the
//! circle.  Five angular families are provided:
//!
//! * [`families::FamilyId::Scarf`] — trigonometric Scarf well (real),
//! * [`families::FamilyId::Pt2`] — trigonometric Pöschl–Teller well with two
//!   walls of equal type (real),
//! * [`families::FamilyId::Pt`] — trigonometric Pöschl–Teller well (real),
//! * [`families::FamilyId::PtRosenMorse`] — complex PT-symmetric
//!   trigonometric Rosen–Morse well,
//! * [`families::FamilyId::PtEckart`] — complex PT-symmetric trigonometric
//!   Eckart well.
//!
//! Everything closed-form is re-checked numerically: [`numverify`] carries a
//! finite-difference discretization, a symmetric tridiagonal eigensolver,
//! high-order stencil residuals and adaptive quadrature, and [`verify`]
//! orchestrates the full audit that the command-line tool exposes.

pub mod error;
pub mod families;
pub mod geometry;
pub mod numverify;
pub mod par;
pub mod report;
pub mod specialfuncs;
pub mod spectra;
pub mod verify;

pub use error::{EopError, Result};
