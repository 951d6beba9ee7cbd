use thiserror::Error;

use crate::root_datum::Coweight;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown root datum preset `{0}`")]
    UnknownPreset(String),

    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("coweight {0} is not dominant")]
    NotDominant(Coweight),

    #[error("basis mismatch: expected {expected}, got {got}")]
    BasisMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("cannot evaluate at zero: polynomial has negative exponents")]
    ZeroEvaluation,

    #[error("odd power of v cannot be specialised at a rational q")]
    OddVPower,

    #[error("torus point has a zero entry")]
    ZeroTorusValue,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
