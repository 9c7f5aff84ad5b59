use std::io;
use std::path::PathBuf;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const VERIFICATION_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const INPUT_FORMAT: u8 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parameter(#[from] crease_core::Error),
    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parameter(_) | CliError::Write { .. } => exit::USAGE,
            CliError::Format { .. } | CliError::Read { .. } => exit::INPUT_FORMAT,
        }
    }

    pub(crate) fn format(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        CliError::Format {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
