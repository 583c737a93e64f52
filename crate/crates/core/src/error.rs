use thiserror::Error;

/// Errors reported by the truth-table, signature, classification and oracle
/// routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid truth-table length: expected {expected} hex digits, found {found}")]
    InvalidLength { expected: usize, found: usize },
    #[error("invalid hex digit {0:?}")]
    InvalidDigit(char),
    #[error("unsupported arity {0} (supported: 1..=16, or matching the operand)")]
    UnsupportedArity(usize),
    #[error("input word {word} out of range for {vars} variables")]
    InvalidWord { word: usize, vars: usize },
    #[error("variable x{var} out of range for {vars} variables")]
    InvalidVariable { var: usize, vars: usize },
    #[error("variable x{0} assigned more than once")]
    InvalidAssignment(usize),
    #[error("cofactor order {order} out of range for {vars} variables")]
    InvalidArity { order: usize, vars: usize },
    #[error("invalid signature selection: {0}")]
    InvalidSelection(String),
    #[error("invalid transform: {0}")]
    InvalidTransform(String),
    #[error("empty input")]
    EmptyInput,
    #[error("classifications are over different function sets")]
    InputMismatch,
    #[error("exact oracle supports at most {max} variables, got {vars}")]
    OracleArityLimit { vars: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
