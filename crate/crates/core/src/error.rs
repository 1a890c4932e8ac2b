use thiserror::Error;

/// Errors raised by the library.
///
/// Variants fall into three families that the CLI maps to exit codes:
/// input/domain problems, verification failures, and exhausted resource limits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("variable sets differ: [{left}] vs [{right}]")]
    VariableSetMismatch { left: String, right: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable index {index} out of range for {len} variables")]
    InvalidIndex { index: usize, len: usize },

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),

    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("{0}")]
    Domain(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid JSON input: {0}")]
    Json(String),

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },

    #[error("invalid Stanley decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid prime filtration: {0}")]
    InvalidFiltration(String),

    #[error("invalid interval partition: {0}")]
    InvalidPartition(String),

    #[error("transformed object failed verification: {0}")]
    TransformViolation(String),

    #[error("characteristic poset has more than {limit} points")]
    PosetTooLarge { limit: usize },

    #[error("enumeration box of {size} lattice points exceeds limit {limit}")]
    BoxTooLarge { size: u128, limit: u128 },

    #[error("search node budget of {limit} exhausted")]
    NodeBudgetExhausted { limit: u64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    /// True for errors caused by a configured resource limit.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::PosetTooLarge { .. } | Error::BoxTooLarge { .. } | Error::NodeBudgetExhausted { .. }
        )
    }

    /// True for errors reporting that an object failed exact verification.
    pub fn is_verification_failure(&self) -> bool {
        matches!(
            self,
            Error::InvalidDecomposition(_)
                | Error::InvalidFiltration(_)
                | Error::InvalidPartition(_)
                | Error::TransformViolation(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
