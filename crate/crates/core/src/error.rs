use thiserror::Error;

/// Errors raised while building cones, generating functions and series.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The parameters violate a cone or group invariant.
    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A generator of the fundamental cone has nonpositive grading, so the
    /// cone is not salient for the chosen grading and cannot be expanded.
    #[error("non-salient cone: generator b_{index} has grading {grading}")]
    NonSalient { index: usize, grading: i64 },

    /// A denominator exponent is not strictly positive after specialization.
    #[error("term {term}: denominator exponent {exponent} is not positive")]
    NonPositiveDenominator { term: usize, exponent: i64 },

    /// Negative-degree contributions of the Laurent terms did not cancel.
    #[error("coefficient of degree {degree} did not cancel in the total")]
    UncancelledLaurentPart { degree: i64 },

    #[error("unbounded enumeration: {0}")]
    Unbounded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
