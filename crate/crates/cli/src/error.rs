use std::process::ExitCode;

use serde_json::json;
use thiserror::Error;

use crate::output::SCHEMA_VERSION;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, missing parameters, unreadable config or input files.
    #[error("{0}")]
    Usage(String),
    /// The computation itself refused the inputs.
    #[error(transparent)]
    Domain(#[from] dce_core::Error),
    /// Writing the result failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Domain(_) => "domain",
            CliError::Io(_) => "io",
        }
    }

    /// Prints to stderr and returns the matching exit code.
    pub fn report(&self, as_json: bool) -> ExitCode {
        if as_json {
            let body = json!({
                "schema_version": SCHEMA_VERSION,
                "error": {
                    "kind": self.kind(),
                    "message": self.to_string(),
                    "exit_code": self.exit_code(),
                }
            });
            eprintln!("{body}");
        } else {
            eprintln!("error: {self}");
        }
        ExitCode::from(self.exit_code())
    }
}

pub type CliResult<T> = Result<T, CliError>;
