use thiserror::Error;

/// Failures surfaced by series, matrix and expansion routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inner series must have zero constant term")]
    NonzeroConstant,
    #[error("series is not reversible: {0}")]
    NotReversible(&'static str),
    #[error("bad constant term: {0}")]
    BadConstantTerm(&'static str),
    #[error("insufficient order: need {needed}, have {available}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("not a pseudo-involution: residual at x^{index} is nonzero")]
    NotPseudoInvolution { index: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("series must start x + ... (g0 = 0, g1 = 1)")]
    NotNormalized,
    #[error("not invertible: {0}")]
    NotInvertible(&'static str),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
