//! Error taxonomy shared by the whole crate.
//!
//! Three categories cover every failure mode:
//!
//! * [`Error::Domain`] — an argument lies outside the mathematical domain
//!   of the requested operation (probability on a boundary, non-finite
//!   input, inconsistent ordering of original and adjusted parameters, …).
//! * [`Error::ModelValidity`] — the arguments are individually fine but
//!   jointly describe a model that does not exist (a correlation matrix
//!   that is not positive semidefinite, or a nonpositive latent variance).
//! * [`Error::NoSolution`] — a well-posed inverse problem has no admissible
//!   solution for these inputs.
//!
//! The distinction matters to batch callers: domain problems point at a bad
//! input row, model-validity problems at an inconsistent parameter set, and
//! no-solution results at a question whose answer genuinely does not exist.

/// Any error produced by this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The parameters jointly describe a model that does not exist.
    #[error("model validity error: {0}")]
    ModelValidity(String),

    /// The inverse problem has no admissible solution for these inputs.
    #[error("no solution: {0}")]
    NoSolution(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
