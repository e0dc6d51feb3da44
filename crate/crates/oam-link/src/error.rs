//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by the numerical substrate and the physics pipeline.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Adaptive quadrature exhausted its subdivision budget before the
    /// requested tolerance was met.
    #[error("quadrature did not converge: estimate {estimate}, error {error} > tolerance {tolerance} after {subdivisions} subdivisions")]
    NonConvergence {
        estimate: f64,
        error: f64,
        tolerance: f64,
        subdivisions: usize,
    },

    /// Gamma function evaluated at a non-positive integer.
    #[error("gamma function pole at x = {0}")]
    PoleError(f64),

    /// The equal-radius waist equation has no positive real root for the
    /// requested state pair.
    #[error("no positive real waist root for |l| = {from} -> |l'| = {to} at z = {z} m")]
    NoRoot { from: i32, to: i32, z: f64 },

    /// Parameter outside its documented domain.
    #[error("domain error: {0}")]
    DomainError(String),

    /// Misaligned field expressions are only defined for OAM states l >= 0.
    #[error("unsupported OAM state {0} for misaligned field evaluation (requires l >= 0)")]
    UnsupportedState(i32),

    /// Antenna index outside [1, N].
    #[error("antenna index {index} out of range [1, {n}]")]
    IndexOutOfRange { index: usize, n: usize },

    /// Regularized MMSE normal matrix could not be inverted.
    #[error("singular matrix in MMSE equalizer (state l = {0})")]
    SingularMatrix(i32),

    /// Scenario file could not be parsed.
    #[error("parse error: {0}")]
    ParseError(String),

    /// Scenario violates a documented invariant.
    #[error("validation error: {0}")]
    ValidationError(String),

    /// Filesystem failure while reading config or writing output.
    #[error("io error: {0}")]
    IoError(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::IoError(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
