use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Error type shared by every module of the crate.
#[derive(Debug)]
pub enum Error {
    /// An operation that requires a nonempty set was given an empty one.
    EmptySet,
    /// Integer arithmetic left the signed word domain.
    Overflow,
    /// CRT composition requires coprime moduli.
    NonCoprime { a: u64, b: u64 },
    /// A size limit was exceeded (modulus, diameter, search space, ...).
    TooLarge {
        what: &'static str,
        value: u128,
        limit: u128,
    },
    /// Invalid argument outside any specific limit.
    Domain(String),
    /// A configured work budget (enumeration, sieve) would be exceeded.
    BudgetExceeded(String),
    /// A randomized search gave up after its attempt cap.
    SearchFailed(String),
    /// A point or pair does not match the arity of its tree.
    ArityMismatch { expected: usize, got: usize },
    /// An exact-rational certificate check failed; indicates a bug, not a
    /// valid outcome.
    DensityCheckFailed(String),
    Io(std::io::Error),
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySet => write!(f, "operation requires a nonempty set"),
            Error::Overflow => write!(f, "integer overflow beyond the word bound"),
            Error::NonCoprime { a, b } => {
                write!(f, "moduli {a} and {b} are not coprime")
            }
            Error::TooLarge { what, value, limit } => {
                write!(f, "{what} {value} exceeds the configured limit {limit}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::BudgetExceeded(msg) => write!(f, "budget exceeded: {msg}"),
            Error::SearchFailed(msg) => write!(f, "search failed: {msg}"),
            Error::ArityMismatch { expected, got } => {
                write!(f, "arity mismatch: expected {expected} coordinates, got {got}")
            }
            Error::DensityCheckFailed(msg) => write!(f, "density check failed: {msg}"),
            Error::Io(e) => write!(f, "io error: {e}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}
