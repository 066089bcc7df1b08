use thiserror::Error;

/// Errors raised by the numerical kernels.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A gamma-function or Pochhammer pole was hit.
    #[error("pole: {0}")]
    Pole(String),
    /// Arguments outside the domain where the routine is valid or validated.
    #[error("domain error: {0}")]
    Domain(String),
    /// A series, quadrature or refinement loop ran out of budget.
    #[error("no convergence: {what} (estimate {estimate:.3e}, budget {budget})")]
    NonConvergence {
        what: String,
        estimate: f64,
        budget: usize,
    },
    /// Malformed input data (sample files, grids).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }

    pub(crate) fn no_convergence(what: impl Into<String>, estimate: f64, budget: usize) -> Self {
        Error::NonConvergence {
            what: what.into(),
            estimate,
            budget,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
