//! Error type shared by all modules of the crate.

use std::fmt;

/// Errors reported by the exact-arithmetic layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter that must be prime is not.
    NotPrime(u64),
    /// A polynomial that must be monic is not.
    NotMonic,
    /// A modulus polynomial that must be irreducible mod p is not.
    Reducible,
    /// Operands belong to different fields.
    FieldMismatch,
    /// Operands belong to different rings or algebras.
    RingMismatch,
    /// Inversion or order of the zero element.
    DivisionByZero,
    /// An operation that needs a nonzero element got zero.
    ZeroElement,
    /// No subfield embedding exists between the two fields.
    NoEmbedding { sub: u64, sup: u64 },
    /// The element is not in the image of the subfield embedding.
    NotInSubfield(u64),
    /// A value fell outside its admissible range.
    OutOfRange {
        what: &'static str,
        value: i64,
        limit: i64,
    },
    /// Rows of differing length were supplied where a matrix was expected.
    RaggedRows,
    /// Vector length does not match the ambient dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// A spanning set must be nonempty.
    EmptySpanningSet,
    /// The requested operation is not available for these parameters.
    Unsupported(String),
    /// A user-supplied parameter is invalid.
    InvalidParameter(String),
    /// An internal consistency condition failed; indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::NotMonic => write!(f, "polynomial is not monic"),
            Error::Reducible => write!(f, "polynomial is reducible"),
            Error::FieldMismatch => write!(f, "elements belong to different fields"),
            Error::RingMismatch => write!(f, "elements belong to different rings"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroElement => write!(f, "operation undefined for the zero element"),
            Error::NoEmbedding { sub, sup } => {
                write!(
                    f,
                    "no field embedding of a size-{sub} field into a size-{sup} field"
                )
            }
            Error::NotInSubfield(e) => write!(f, "element {e} is not in the embedded subfield"),
            Error::OutOfRange { what, value, limit } => {
                write!(f, "{what} = {value} out of range (limit {limit})")
            }
            Error::RaggedRows => write!(f, "rows have inconsistent lengths"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::EmptySpanningSet => write!(f, "spanning set is empty"),
            Error::Unsupported(s) => write!(f, "unsupported operation: {s}"),
            Error::InvalidParameter(s) => write!(f, "invalid parameter: {s}"),
            Error::Internal(s) => write!(f, "internal consistency error: {s}"),
        }
    }
}

impl std::error::Error for Error {}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
