use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RadonError {
    #[error("valuation of zero is indeterminate")]
    IndeterminateValuation,
    #[error("point must be nonzero")]
    ZeroPoint,
    #[error("q = {0} is not a supported prime")]
    UnsupportedPrime(u64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cells {0} and {1} overlap")]
    Overlap(String, String),
    #[error("cell {0} contains the origin")]
    ZeroInSupport(String),
    #[error("cyclotomic conductor q^{available} is too small, q^{required} is required")]
    InsufficientConductor { required: u32, available: u32 },
    #[error("p-adic digit precision exceeded: {0}")]
    PrecisionExceeded(String),
    #[error("pole of the Gamma function at {0}")]
    Pole(String),
    #[error("jet order {available} is insufficient, order {required} is required")]
    InsufficientJetOrder { required: usize, available: usize },
    #[error("origin is not an interior point, the polar dual is unbounded")]
    UnboundedDual,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, RadonError>;
