use thiserror::Error;

use crate::gf::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("division by zero")]
    DivisionByZero,

    #[error("value {value} is not an element of {field}")]
    ElementOutOfRange { value: u8, field: Field },

    /// Participant index outside `[1, q - 1]`; `n` exceeds field capacity.
    #[error("evaluation point {index} unavailable: n exceeds field capacity of {field} (max {})", field.max_participants())]
    EvaluationPointsExhausted { index: usize, field: Field },

    #[error("unknown field id {0:#04x}")]
    UnknownField(u8),

    #[error("unknown cipher suite id {0:#04x}")]
    UnknownSuite(u8),

    #[error("unknown scheme id {0:#04x}")]
    UnknownScheme(u8),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("duplicate share index {0}")]
    DuplicateIndex(usize),

    #[error("vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// Fewer than `required` shares or fragments supplied: the failure symbol.
    #[error("insufficient shares: need {required}, got {got}")]
    InsufficientShares { required: usize, got: usize },

    #[error("incompatible shares: {0}")]
    IncompatibleShares(String),

    #[error("enumeration space too large: {size} cases (limit {limit})")]
    SpaceTooLarge { size: u128, limit: u128 },

    #[error("random source failure: {0}")]
    Rng(String),

    /// Reserved for authenticated suites; stream suites never produce it.
    #[error("decryption failed")]
    Decryption,

    #[error("bad share file magic")]
    BadMagic,

    #[error("unsupported share format version {0}")]
    UnsupportedVersion(u8),

    #[error("malformed share file: {0}")]
    Malformed(String),
}
