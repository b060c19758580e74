use thiserror::Error;

/// Errors reported by evaluation and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Parameter or argument outside the documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A bound or witness was requested outside its hypothesis range.
    #[error("hypothesis violated for {quantity}: {detail}")]
    HypothesisViolated {
        quantity: &'static str,
        detail: String,
    },

    /// No truncation index up to the hard cap certifies the tolerance.
    /// The series is entire, so this indicates a kernel problem rather
    /// than a mathematical limit.
    #[error("no truncation index <= {cap} certifies tail <= {tol:e} for alpha = {alpha}, beta = {beta}")]
    TruncationFailure {
        alpha: f64,
        beta: f64,
        tol: f64,
        cap: usize,
    },

    /// A ratio or witness denominator came closer to zero than the guard
    /// allows; under the theorem hypotheses the certificates rule this out,
    /// so it signals parameter misuse rather than a math singularity.
    #[error("denominator modulus {modulus:e} is below the guard {guard:e}")]
    SingularDenominator { modulus: f64, guard: f64 },

    /// A coefficient-sum certificate failed, so a denominator cannot be
    /// proven nonvanishing and the scan is not attempted.
    #[error("certificate failure: {certificate} = {value} must stay below 1")]
    CertificateFailure {
        certificate: &'static str,
        value: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
