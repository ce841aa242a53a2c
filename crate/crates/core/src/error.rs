//! The single error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown variable '{0}'")]
    UnknownVariable(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: String },

    #[error("no image assigned to variable '{0}'")]
    MissingAssignment(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("not a member of the ideal; remainder {remainder}")]
    MembershipFailed { remainder: String },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("genericity failure: {0}")]
    Genericity(String),

    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl AlgebraError {
    pub fn is_budget(&self) -> bool {
        matches!(self, AlgebraError::BudgetExceeded(_))
    }
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
