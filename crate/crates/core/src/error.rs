use thiserror::Error;

/// Errors produced by the engines. Violations found by decomposition
/// verification are data, not errors; see [`crate::stanley::Verdict`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring size mismatch: expected {expected} variables, found {found}")]
    RingSizeMismatch { expected: usize, found: usize },
    #[error("variable x{var} out of range for a ring with {n} variables")]
    VarOutOfRange { var: usize, n: usize },
    #[error("ring size {n} exceeds the supported maximum of {max}")]
    RingTooLarge { n: usize, max: usize },
    #[error("operation requires a nonzero module")]
    ZeroModule,
    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,
    #[error("operation requires a proper ideal")]
    UnitIdeal,
    #[error("operation requires a squarefree input")]
    NotSquarefree,
    #[error("invalid quotient presentation: {0}")]
    InvalidPresentation(String),
    #[error("decomposition has no Stanley spaces")]
    EmptyDecomposition,
    #[error("input decomposition failed verification: {0}")]
    InvalidDecomposition(String),
    #[error("monomial lies in the ideal")]
    MonomialInIdeal,
    #[error("(I, J) is not the variable split of T")]
    InconsistentSplit,
    #[error("input size {got} exceeds the cap of {cap} for this operation")]
    CapExceeded { got: usize, cap: usize },
    #[error("certificate failed its independent recheck: {0}")]
    CertificateInvalid(String),
    #[error("dimension filtration invariant failed: {0}")]
    FiltrationInvariant(String),
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("check `{check}` is not feasible at n = {n} (supported: {min} ..= {max})")]
    CheckInfeasible {
        check: String,
        n: usize,
        min: usize,
        max: usize,
    },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("malformed JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
