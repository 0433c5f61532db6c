use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("scalar is not regular at q = infinity: {0}")]
    NotRegularAtInfinity(String),

    #[error("cannot parse scalar: {0}")]
    Parse(String),

    #[error("invalid Cartan datum: {0}")]
    InvalidDatum(String),

    #[error("weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("modules built over different Cartan data")]
    DatumMismatch,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("vector is not in the lattice: coordinate {index} is {value}")]
    LatticeViolation { index: usize, value: String },

    #[error("crystal integrity violation: {0}")]
    CrystalIntegrity(String),

    #[error("route disagreement between {left} and {right} at entry ({row},{col}): {lhs} vs {rhs}")]
    RouteDisagreement {
        left: String,
        right: String,
        row: usize,
        col: usize,
        lhs: String,
        rhs: String,
    },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
