use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or out-of-range input.
    #[error("{0}")]
    Validation(String),

    /// The solver rejected a parameter combination as degenerate.
    #[error("{source}\nparameters:\n{dump}")]
    Degenerate { source: surfel_core::Error, dump: String },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::Io { .. } => 1,
            CliError::Degenerate { .. } => 2,
            CliError::Verification(_) => 3,
        }
    }

    /// Maps a core error, attaching `dump` to solver failures.
    pub fn from_core(e: surfel_core::Error, dump: impl FnOnce() -> String) -> Self {
        match e {
            surfel_core::Error::InvalidParameter { .. } => CliError::Validation(e.to_string()),
            _ => CliError::Degenerate { source: e, dump: dump() },
        }
    }

    pub fn io(path: impl std::fmt::Display, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_string(), source }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
