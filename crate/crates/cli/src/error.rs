use std::path::PathBuf;

/// Errors surfaced by the command-line front end, each tied to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("cannot access {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("solver failure: {0}")]
    Solver(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::CheckFailed(_) => exit::CHECK_FAILED,
            CliError::Config(_) | CliError::Io { .. } => exit::CONFIG_ERROR,
            CliError::Solver(_) => exit::SOLVER_FAILURE,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<loopmech_core::Error> for CliError {
    fn from(e: loopmech_core::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

pub mod exit {
    pub const OK: u8 = 0;
    pub const CHECK_FAILED: u8 = 1;
    pub const CONFIG_ERROR: u8 = 2;
    pub const SOLVER_FAILURE: u8 = 3;
}
