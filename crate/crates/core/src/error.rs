use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("truncation bounds disagree: {left:?} vs {right:?}")]
    BoundMismatch {
        left: Option<usize>,
        right: Option<usize>,
    },

    #[error("λ-recurrence step λ={lambda} left a remainder: numerator {numerator} is not divisible by {lambda}")]
    Indivisible { lambda: u64, numerator: String },

    #[error("invalid die: {0}")]
    InvalidDie(String),

    #[error("invalid linear system: {0}")]
    InvalidSystem(String),

    #[error("enumeration needs {needed} outcomes, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("unknown table id `{0}`")]
    UnknownTable(String),

    #[error("malformed golden data: {0}")]
    GoldenData(String),
}
