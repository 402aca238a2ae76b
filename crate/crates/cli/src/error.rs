use thiserror::Error;

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Internal = 1,
    Domain = 2,
    BudgetExceeded = 3,
    Mismatch = 4,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] recurra::Error),
    #[error("{0}")]
    Mismatch(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Config(_) | CliError::Json(_) => ExitCode::Domain,
            CliError::Core(recurra::Error::BudgetExceeded { .. }) => ExitCode::BudgetExceeded,
            CliError::Core(_) => ExitCode::Domain,
            CliError::Mismatch(_) => ExitCode::Mismatch,
            CliError::Io(_) => ExitCode::Internal,
        }
    }
}
