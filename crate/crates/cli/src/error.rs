use std::path::PathBuf;

use thiserror::Error;

/// Failures of a subcommand, each mapped to a stable exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for anything wrong with the invocation or the input text, 3 when the
    /// input parses but cannot be tested, 1 when output cannot be written.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Write { .. } => 1,
        }
    }
}

impl From<twosample::Error> for CliError {
    fn from(e: twosample::Error) -> Self {
        match e {
            twosample::Error::InvalidPlan(_) => CliError::Usage(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<twosample_sim::SimError> for CliError {
    fn from(e: twosample_sim::SimError) -> Self {
        use twosample_sim::SimError;
        match e {
            SimError::Core(core) => core.into(),
            SimError::InvalidInput(msg) => CliError::Usage(msg),
            SimError::Degenerate(_) => CliError::Input(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
