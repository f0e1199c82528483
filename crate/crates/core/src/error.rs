use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("operands live in different variable contexts")]
    ContextMismatch,

    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("step budget of {budget} S-polynomial reductions exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("minor size {size} out of range for a {rows}x{cols} matrix")]
    MinorSize {
        size: usize,
        rows: usize,
        cols: usize,
    },

    #[error("kernel dimension is {actual}, expected {expected}")]
    KernelDimMismatch { expected: usize, actual: usize },

    #[error("point is not on the variety: generator `{generator}` evaluates to {value}")]
    PointNotOnVariety { generator: String, value: String },

    #[error("ambient ideal is the unit ideal: X is empty")]
    EmptyVariety,

    #[error("kernel along the curve is zero-dimensional: nothing to limit")]
    DegenerateCurve,

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("parameters out of supported range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
