use std::time::Duration;

use thiserror::Error;

/// Errors raised by graph construction, solvers and theorem-hypothesis checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrdError {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A theorem hypothesis does not hold for the given graph(s).
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph of order {order} exceeds the limit of {limit} for {what}")]
    Size {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    /// The search budget ran out before optimality was proven. `lower` and
    /// `upper` are the best bounds known at that moment.
    #[error("budget of {budget:?} exhausted; optimum lies in [{lower}, {upper}]")]
    Timeout {
        budget: Duration,
        lower: u32,
        upper: u32,
    },

    /// A construction produced an object that failed re-verification.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl TrdError {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            TrdError::Input(_) => "input",
            TrdError::Parse { .. } => "parse",
            TrdError::Hypothesis(_) => "hypothesis",
            TrdError::Precondition(_) => "precondition",
            TrdError::Size { .. } => "size",
            TrdError::Timeout { .. } => "timeout",
            TrdError::Internal(_) => "internal",
        }
    }
}

pub type Result<T, E = TrdError> = std::result::Result<T, E>;
