use thiserror::Error;

/// Everything a command can fail with, mapped onto process exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: homlab_core::Error },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] homlab_core::Error),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use homlab_core::Error as E;
        match self {
            CliError::Verification(_) => 1,
            CliError::Parse { .. } | CliError::Io { .. } => 2,
            CliError::Core(E::Parse { .. } | E::InvalidGraph(_)) => 2,
            CliError::Usage(_) => 3,
            CliError::Core(_) => 4,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
