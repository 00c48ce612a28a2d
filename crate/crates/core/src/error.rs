use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the unit ideal cannot be represented (1 is a generator)")]
    UnitIdeal,

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("values belong to different rings")]
    RingMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("bitset search supports at most 64 variables, got {0}")]
    VariableLimit(usize),

    #[error("budget exceeded for {what}: {value} > {limit} (set MONOIDEAL_BUDGET to raise)")]
    BudgetExceeded {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("engines disagree: {0}")]
    OracleMismatch(String),

    #[error("prime is minimal, not embedded")]
    NotEmbedded,

    #[error("prime is not an associated prime of the ideal")]
    NotAssociated,

    /// Raised when an embedded prime admits no expression as a minimal prime
    /// plus star-neighbor variables. This never fires on correct input; it
    /// exists so a counterexample to the decomposition would surface loudly.
    #[error("no decomposition of {0} into a minimal prime plus star-neighbor variables exists")]
    NoDecomposition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
