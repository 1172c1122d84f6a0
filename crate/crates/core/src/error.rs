use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),

    #[error("digit {digit} at index {index} is outside [0, {max}]")]
    DigitOutOfRange { index: usize, digit: i64, max: u32 },

    #[error("{0} digits do not fit in precision {1}")]
    TooManyDigits(usize, usize),

    #[error("precision must be at least 1")]
    ZeroPrecision,

    #[error("arity must be at least 1")]
    ZeroArity,

    #[error("precision mismatch: {0} vs {1}")]
    PrecisionMismatch(String, String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cantor digit {digit} at position {position} is not a multiple of {arity} in [0, {max}]")]
    InvalidCantorDigit {
        position: usize,
        digit: u32,
        arity: usize,
        max: u32,
    },

    #[error("expected {expected} parts, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("codomain mismatch: expected {expected}, found {found}")]
    CodomainMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("argument {0} is outside the domain")]
    DomainViolation(String),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("table format error at {location}: {message}")]
    TableFormat { location: String, message: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("{what} needs {count} entries, above the limit of {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        count: u128,
        limit: u128,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.to_owned(),
            reason: reason.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
