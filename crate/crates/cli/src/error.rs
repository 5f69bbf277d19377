use std::fmt;

use tutte_atlas_core::Error;

/// Failure of a command, split by exit status: bad input exits with 1, a
/// failed computation with 2.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Usage(String),
    Computation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Computation(_) => 2,
        }
    }

    pub fn input(e: impl fmt::Display) -> Self {
        CliError::Usage(format!("cannot read input: {e}"))
    }

    pub fn output(e: impl fmt::Display) -> Self {
        CliError::Computation(format!("cannot write output: {e}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Computation(m) => write!(f, "computation failed: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidRange(_)
            | Error::Parse(_)
            | Error::Unsupported(_)
            | Error::InvalidGraph(_)
            | Error::Disconnected
            | Error::TooLarge { .. }
            | Error::NotSymmetric => CliError::Usage(e.to_string()),
            Error::Overflow
            | Error::RealAxis
            | Error::ZeroOfPartition
            | Error::NoUniqueDominant
            | Error::NoConvergence { .. } => CliError::Computation(e.to_string()),
        }
    }
}
