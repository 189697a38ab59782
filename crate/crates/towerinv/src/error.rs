//! Error type shared by all modules.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum TowerError {
    #[error("invalid character: {0}")]
    InvalidCharacter(String),

    #[error("not a subfield: {0}")]
    NotASubfield(String),

    #[error("principal character has no L-value here")]
    PrincipalCharacter,

    #[error("genus is zero (base field is the rationals)")]
    ZeroGenus,

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("tower is unramified; relative invariants undefined")]
    UnramifiedTower,

    #[error("insufficient levels: requested depth {requested}, available {available}")]
    InsufficientLevels { requested: usize, available: usize },

    #[error("cannot certify which primes have finite degree in this tower kind")]
    UndecidableTail,

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("monotonicity violated: {0}")]
    MonotonicityViolated(String),

    #[error("transitivity violated: {0}")]
    TransitivityViolated(String),

    #[error("unknown subgroup label: {0}")]
    UnknownSubgroup(String),

    #[error("lattice is inconsistent: {0}")]
    InconsistentLattice(String),

    #[error("non-integral discriminant exponent: {0}")]
    NonIntegralExponent(String),

    #[error("inconsistent ramification data: {0}")]
    InconsistentRamification(String),

    #[error("no prime power matches the constant {0}")]
    NoPrimePowerMatch(String),

    #[error("ambiguous match: {0}")]
    AmbiguousMatch(String),

    #[error("parse error: {0}")]
    ParseError(String),

    #[error("unsupported schema version {0}")]
    SchemaVersion(u64),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, TowerError>;

impl TowerError {
    /// Process exit code for the CLI: 2 for bad input, 3 for internal faults.
    pub fn exit_code(&self) -> i32 {
        match self {
            TowerError::Internal(_) => 3,
            _ => 2,
        }
    }
}

impl From<serde_json::Error> for TowerError {
    fn from(e: serde_json::Error) -> Self {
        TowerError::ParseError(format!("line {}, column {}: {}", e.line(), e.column(), e))
    }
}
