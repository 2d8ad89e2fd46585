//! Schur algorithm for Carathéodory data and variability regions of
//! integral functionals over analytic maps into a convex domain.
//!
//! The pipeline is:
//!
//! * [`schur`] classifies coefficient data `(c0, ..., cn)` against the
//!   coefficient body of the unit ball of `H^∞` and produces Schur parameters.
//! * [`poly`] builds the Schur polynomials from interior parameters, evaluates
//!   the extremal interpolants and the pointwise variability disk.
//! * [`domains`] supplies Riemann maps onto convex target domains.
//! * [`regions`] computes the variability region of
//!   `∫_0^{z0} ζ^j (g(ζ) - g(0)) dζ` as a sampled convex Jordan curve, with a
//!   Monte-Carlo membership oracle and a closed-form cross-check.
//! * [`verify`] runs the polynomial identity and inequality suites.

// `!(x < 1.0)` style guards reject NaN on purpose
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod domains;
pub mod error;
pub mod geometry;
pub mod poly;
pub mod quad;
pub mod regions;
pub mod schur;
pub mod verify;

pub use num_complex::Complex64;

pub use domains::DomainMap;
pub use error::{Result, SchurError};
pub use poly::{Polynomial, SchurPolynomials, VariabilityDisk};
pub use regions::{OracleSample, RegionRequest, RegionResult};
pub use schur::{CaratheodoryData, ExteriorReason, SchurClassification, ToleranceConfig};
