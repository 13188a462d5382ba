use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Domain(#[from] ffl_core::Error),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Verification(_) => 2,
            CliError::Usage(_) => 64,
            CliError::Io(_) => 74,
        }
    }
}
