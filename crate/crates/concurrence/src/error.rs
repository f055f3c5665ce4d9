use concurrence_core::Error as CoreError;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const BAD_INPUT: i32 = 2;
    pub const UNPHYSICAL: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    BadInput(String),
    #[error("unphysical state: {0}")]
    Unphysical(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::BadInput(_) | CliError::Io { .. } => exit::BAD_INPUT,
            CliError::Unphysical(_) => exit::UNPHYSICAL,
            CliError::Verification(_) => exit::VERIFICATION_FAILED,
        }
    }

    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NotHermitian { .. }
            | CoreError::TraceNotOne { .. }
            | CoreError::NotPositive { .. } => CliError::Unphysical(e.to_string()),
            CoreError::CrossCheck { .. } => CliError::Verification(e.to_string()),
            other => CliError::BadInput(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
