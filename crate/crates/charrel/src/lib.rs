//! Command-line front end: configuration, cached character tables, JSON
//! reports and the invariant suite.

pub mod cache;
pub mod cli;
pub mod config;
pub mod report;
pub mod verify;

use charrel_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    /// 1 for bad input or domain errors, 2 for resource guards, 3 for falsification.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::ResourceGuard(_)) => 2,
            CliError::Core(Error::Falsified(_) | Error::Internal(_) | Error::InterpolationMismatch(_)) => 3,
            _ => 1,
        }
    }
}
