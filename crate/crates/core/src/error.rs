//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the workbench.
///
/// The CLI maps these onto exit codes: data/format problems (parsing,
/// twist mismatches, malformed fixtures) exit with 3, violated
/// mathematical preconditions (characteristic too small, zero inputs,
/// vanishing discriminants) exit with 4.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("twist mismatch in {context}: expected {expected}, found {found}")]
    TwistMismatch {
        context: &'static str,
        expected: i64,
        found: i64,
    },

    #[error("mixed coefficient fields: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("zero polynomial not allowed in {0}")]
    ZeroPolynomial(&'static str),

    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact division: {0}")]
    InexactDivision(&'static str),

    #[error("characteristic {p} too small: need p > {bound} for {context}")]
    CharacteristicTooSmall {
        p: u64,
        bound: i64,
        context: &'static str,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("operation requires prime-field coefficients, got rationals")]
    PrimeFieldRequired,

    #[error("discriminant vanishes identically")]
    ZeroDiscriminant,

    #[error("determinant vanishes identically")]
    ZeroDeterminant,

    #[error("no squarefree specialization found over the base field")]
    NoSquarefreeSpecialization,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("genus formula yields a negative value for n={n}, deg N={deg_n}, g(C)={g_base}")]
    NegativeGenus { n: u64, deg_n: u64, g_base: u64 },

    #[error("parse error in field `{field}`: {message}")]
    Parse { field: String, message: String },

    #[error("invalid input in `{field}`: {message}")]
    Invalid { field: String, message: String },
}

impl Error {
    pub fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }

    pub fn invalid(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Invalid {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
