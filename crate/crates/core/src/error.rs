use thiserror::Error;

/// Errors raised by the exact pipeline.
///
/// `InvalidInput` covers everything a caller can fix by passing different
/// arguments; the remaining variants signal that an internal cross-check
/// failed and the result must not be trusted.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no nontrivial character to F_{k}: {k} does not divide the knot determinant")]
    NoCharacter { k: u64 },
    #[error("twisted determinant vanishes identically (twisted homology is not torsion)")]
    ZeroDeterminant,
    #[error("exact polynomial division left a remainder")]
    NotDivisible,
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }

    /// Process exit code used by the CLI: 1 for bad input, 2 for failed
    /// internal checks.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::NotPrime(_) | Error::NoCharacter { .. } => 1,
            Error::ZeroDeterminant | Error::NotDivisible | Error::Inconsistency(_) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
