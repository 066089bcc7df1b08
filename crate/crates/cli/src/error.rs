use std::fmt;

use relbarg::Error;

/// Failure classes, each with its own exit status.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Config(String),
    Domain(String),
    NonConvergence(String),
    Input(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Domain(_) => 3,
            CliError::NonConvergence(_) => 4,
            CliError::Input(_) => 5,
        }
    }

    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Domain(m) => write!(f, "{m}"),
            CliError::NonConvergence(m) => write!(f, "{m}"),
            CliError::Input(m) => write!(f, "unparseable input: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Pole(_) => CliError::Domain(e.to_string()),
            Error::NonConvergence { .. } => CliError::NonConvergence(e.to_string()),
            Error::InvalidInput(m) => CliError::Input(m),
        }
    }
}
