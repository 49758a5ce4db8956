//! Exact spectral toolkit for symmetric hypermatrices.
//!
//! The crate computes characteristic polynomials in factored form, eigenvalue
//! multiplicities, and spectral measures for two families of symmetric
//! hypermatrices — the all-ones hypermatrix and single-seed sunflower
//! hypergraphs of uniformity three — entirely in exact arithmetic, and
//! cross-checks every closed form against an independent resultant oracle
//! (Sylvester matrices for two variables, Macaulay quotients for three or
//! more).
//!
//! Modules:
//!
//! - [`cyclotomic`]: exact arithmetic in the ring of integers extended by a
//!   primitive q-th root of unity; canonical forms, rotation orbits, complex
//!   embedding.
//! - [`polynomial`]: dense exact univariate polynomials over integers,
//!   rationals, or cyclotomic integers; sparse multivariate polynomials with
//!   polynomial coefficients; Lagrange interpolation; the roots-of-unity
//!   product transform.
//! - [`walks`]: exact endpoint tables of lattice walks whose steps are the
//!   q-th roots of unity.
//! - [`spectra`]: factored characteristic polynomials, eigenvectors, and
//!   variety points for the supported families.
//! - [`resultants`]: the independent oracle — eigen-systems, Sylvester and
//!   Macaulay resultants via evaluation-interpolation, and a numeric check
//!   of the product formula for binary forms.
//! - [`distribution`]: spectral measures, their closed forms, exact moment
//!   identities, and a numeric central-limit probe.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to use from multiple threads without
//! synchronization.

pub mod cyclotomic;
pub mod error;
pub mod linalg;
pub mod polynomial;
pub mod resultants;
pub mod walks;
pub mod serde_util;

pub use error::{Error, Result};
