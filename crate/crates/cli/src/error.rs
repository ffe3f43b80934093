use std::path::PathBuf;
use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, bad input files, out-of-domain parameters.
    #[error("{0}")]
    Usage(String),
    #[error("{path}:{line}: {message}")]
    ProblemFile {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{path}: missing required key '{key}'")]
    MissingKey { path: PathBuf, key: &'static str },
    /// The computation ran but did not succeed.
    #[error("{0}")]
    Numerical(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Numerical(_) => ExitCode::from(1),
            CliError::Io { .. } | CliError::Csv(_) => ExitCode::from(1),
            _ => ExitCode::from(2),
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<boubaker::Error> for CliError {
    fn from(e: boubaker::Error) -> Self {
        CliError::Numerical(e.to_string())
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
