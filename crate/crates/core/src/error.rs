use thiserror::Error;

/// Errors raised by the algebraic routines when a precondition is violated
/// or external input cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable index {0} is not an odd positive integer")]
    NotOddIndex(i64),
    #[error("coefficient sequence must start with 1, found {0}")]
    LeadingCoefficient(String),
    #[error("parameter sequence must start with a0 = 0, found {0}")]
    NonzeroA0(String),
    #[error("parameter sequence has {have} entries, index {need} is required")]
    ParamsTooShort { have: usize, need: usize },
    #[error("cutoff {cutoff} is smaller than n = {n}")]
    CutoffTooSmall { cutoff: usize, n: usize },
    #[error("index vector entry {0} must be a positive integer")]
    NonPositiveEntry(i64),
    #[error("{0} is not a strict partition")]
    NotStrict(String),
    #[error("oracle supports at most {max} variables, {requested} requested")]
    TooManyVariables { requested: usize, max: usize },
    #[error("vector of length {len} needs at least as many variables, got {vars}")]
    TooFewVariables { len: usize, vars: usize },
    #[error("{0} is out of the supported range")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
