use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] gue_core::Error),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Core(gue_core::Error::InvalidInput(_)) => 2,
            CliError::Core(gue_core::Error::BudgetExceeded { .. }) => 3,
            CliError::Core(_) | CliError::Io(_) => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse(_) => "parse",
            CliError::Core(gue_core::Error::InvalidInput(_)) => "invalid_input",
            CliError::Core(gue_core::Error::BudgetExceeded { .. }) => "budget",
            CliError::Core(_) => "consistency",
            CliError::Io(_) => "io",
        }
    }

    /// `{"error": {"kind", "message", "exit_code"}}`, written to stderr.
    pub fn to_json(&self) -> serde_json::Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string(), "exit_code": self.exit_code() } })
    }
}
