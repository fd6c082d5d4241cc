use thiserror::Error;

/// Errors produced by field construction, code construction, and verification.
#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("field order {0} exceeds the supported maximum {1}")]
    FieldTooLarge(u64, u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero field element")]
    ZeroInverse,
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("designed rank distance {delta} out of range for a {rows}x{cols} code")]
    DistanceOutOfRange {
        delta: usize,
        rows: usize,
        cols: usize,
    },
    #[error("filling has a non-zero entry outside the dot mask at row {row}, column {col}")]
    MaskViolation { row: usize, col: usize },
    #[error("exhaustive scan over {needed} codewords exceeds the cap of {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dump parse error at line {line}: {message}")]
    DumpParse { line: usize, message: String },
    #[error("dump is inconsistent: {0}")]
    DumpInvalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
