use std::fmt;

/// A failed invocation, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input or arguments. Exit 1.
    Parse(String),
    /// The input is well formed but violates a law, or a check failed. Exit 2.
    Math(String),
    /// A resource cap was exceeded. Exit 3.
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Math(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Math(m) => write!(f, "error: {m}"),
            CliError::Cap(m) => write!(f, "resource cap: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<spectra_core::Error> for CliError {
    fn from(e: spectra_core::Error) -> Self {
        use spectra_core::Error;
        match e {
            Error::CarrierTooLarge { .. } => CliError::Cap(e.to_string()),
            Error::Shape(_) => CliError::Parse(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
