use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("dimension guard exceeded: {needed} > {cap} (raise the cap to proceed)")]
    Guard { needed: usize, cap: usize },
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("group-like solver scope exceeded: {0}")]
    SolverScope(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("transport violation: {0}")]
    TransportViolation(String),
    #[error("action is not through monomorphisms: {0}")]
    NotMonoAction(String),
    #[error("zero divisor found: {0}")]
    ZeroDivisor(String),
    #[error("condition '{name}' violated at {witness:?}")]
    Condition { name: String, witness: Vec<usize> },
    #[error("cocycle is not convolution invertible")]
    CocycleNotInvertible,
    #[error("enumeration cap {0} exceeded")]
    EnumerationCap(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
