use thiserror::Error;

use crate::series::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial coefficient with negative upper index {0}")]
    NegativeUpperIndex(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(Var, Var),
    #[error("truncation order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(String, String),
    #[error("substituted series must have zero constant term")]
    NonzeroConstantTerm,
    #[error("series has zero constant term and is not invertible")]
    NotInvertible,
    #[error("log requires constant term 1")]
    LogConstantTerm,
    #[error("not a delta series: need f(0) = 0 and nonzero linear coefficient")]
    NotDelta,
    #[error("rows do not form a pseudo-basis (singular coefficient matrix)")]
    NotPseudoBasis,
    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("truncation order must be at least 1")]
    ZeroOrder,
    #[error(transparent)]
    Parse(#[from] crate::parser::ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
