use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("group too large: order exceeds the cap of {cap}")]
    GroupTooLarge { cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{k} is not coprime to the conductor {n}")]
    NotCoprime { k: i64, n: u64 },

    #[error("value {0} is not integral at the reduction prime")]
    NotIntegral(String),

    #[error("conductor {conductor} is not covered by the reduction map (p'-part {capacity})")]
    ConductorTooLarge { conductor: u64, capacity: u64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("table inconsistent: {0}")]
    TableInconsistent(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("eigenspace splitting failed for every prime tried ({0:?})")]
    SplittingFailed(Vec<u64>),

    #[error("class functions belong to different tables")]
    TableMismatch,

    #[error("fusion map inconsistent: {0}")]
    FusionInconsistent(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("not a Frobenius complement: {0}")]
    NotFrobeniusComplement(String),

    #[error("subgroup of order {order} is not a {p}-group")]
    NotPGroup { p: u64, order: usize },

    #[error("incompatible Brauer table: {0}")]
    IncompatibleBrauerTable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures of a mathematical consistency check, as opposed to
    /// malformed input or usage problems.
    pub fn is_verification_failure(&self) -> bool {
        matches!(
            self,
            Error::TableInconsistent(_)
                | Error::Verification(_)
                | Error::IncompatibleBrauerTable(_)
                | Error::NotIntegral(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
