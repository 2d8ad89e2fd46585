use schurvar::SchurError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("data is {0}, not interior; run `schurvar classify` for details")]
    NotInterior(&'static str),
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::NotInterior(_) => 3,
            CliError::Schur(SchurError::InvalidInput(_) | SchurError::ContractViolation(_)) => 2,
            CliError::Schur(_) => 4,
        }
    }
}
