//! Error type shared by all modules.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the numerical routines.
///
/// Non-convergence of the quadrature engine itself is *not* an error: the
/// engine reports it through [`crate::quadrature::QuadratureResult::converged`]
/// and callers decide. Operations that promise a value to a tolerance
/// (e.g. the extended gamma function) convert that flag into
/// [`Error::NonConvergence`].
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested series diverges for the given parameters.
    #[error("divergent series: {0}")]
    Divergence(String),

    /// An iterative evaluation failed to meet the requested tolerance.
    #[error("failed to converge: {0}")]
    NonConvergence(String),

    /// An identity case violates the theorem hypotheses.
    #[error("invalid case: {0}")]
    InvalidCase(String),
}
