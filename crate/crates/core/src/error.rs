//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the exact-arithmetic and oracle operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A root order of zero was requested; the ring is only defined for q >= 1.
    #[error("root order q must be positive")]
    ZeroOrder,

    /// An input vector did not have the length required by the operation.
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// A parameter failed a precondition (bad range, wrong shape, ...).
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// A desk-scale resource guard was exceeded.
    #[error("guard exceeded: {what} = {value} > {limit}")]
    GuardExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    /// Polynomial interpolation was given duplicate abscissae.
    #[error("duplicate abscissa {0} in interpolation input")]
    DuplicateAbscissa(String),

    /// Mixed coefficient domains in a polynomial operation.
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    /// An expansion produced a coefficient outside the rational integers.
    /// This signals a multiplicity or orbit-merging bug upstream.
    #[error("non-integer coefficient after expansion: {0}")]
    NonIntegerCoeff(String),

    /// The resultant of the system is identically zero (degenerate system).
    #[error("zero resultant: the system is degenerate")]
    ZeroResultant,

    /// Too many sample points were degenerate during evaluation-interpolation.
    #[error("insufficient valid sample points for interpolation ({got} of {needed})")]
    InsufficientSamples { needed: usize, got: usize },

    /// Numeric root-finding detected (nearly) repeated roots; the instance
    /// must be rejected and re-drawn by the caller.
    #[error("repeated roots detected (minimum separation {min_sep:.3e})")]
    RepeatedRoots { min_sep: f64 },

    /// A JSON payload did not satisfy the documented schema invariants.
    #[error("invalid input data: {0}")]
    InvalidData(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
