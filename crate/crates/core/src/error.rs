use thiserror::Error;

/// Errors raised by the ring, polynomial and resultant layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different ring contexts")]
    ContextMismatch,
    #[error("not a splitting element: {0}")]
    NotSplitting(String),
    #[error("moduli are not coprime")]
    NotCoprime,
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("leading coefficient is not invertible; use divrem_primitive")]
    NonInvertibleLeadingCoefficient,
    #[error("polynomial is not primitive")]
    NotPrimitive,
    #[error("needs split: pivot coefficient {0} is a splitting element")]
    NeedsSplit(String),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("neither leading coefficient is invertible; use the Euclidean path")]
    NoInvertibleLeadingCoefficient,
    #[error("insufficient precision: loss {loss} reached working precision {precision}")]
    InsufficientPrecision { loss: u32, precision: u32 },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("exponent hint insufficient: {0}")]
    InsufficientHint(String),
    #[error("element is not integral")]
    NotIntegral,
    #[error("parse error at position {position}: {message} (expected {expected})")]
    Parse {
        position: usize,
        message: String,
        expected: &'static str,
    },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
