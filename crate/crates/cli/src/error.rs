use std::path::PathBuf;

use thiserror::Error;

/// Command failures, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] npn_core::Error),
    #[error("{path}:{line}: {source}")]
    Corpus {
        path: String,
        line: usize,
        source: npn_core::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0} soundness violation(s) detected")]
    Violations(usize),
}

impl CliError {
    /// 2 for invalid input, 3 for I/O failures, 4 for soundness violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(_) | CliError::Corpus { .. } | CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Violations(_) => 4,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> CliError {
        let path = path.into();
        move |source| CliError::Io { path, source }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
