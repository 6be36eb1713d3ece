//! Command-line front end: exact tables, cross-route ratio reports, Monte-Carlo runs,
//! identity and asymptotics checks, and the full verification suite.

pub mod commands;
pub mod report;
pub mod verify;

use std::path::PathBuf;

use thiserror::Error;

pub use commands::Outcome;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Engine(#[from] schur_ratio::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
            CliError::Engine(schur_ratio::Error::Domain { .. } | schur_ratio::Error::Precision(_)) => EXIT_USAGE,
            CliError::Engine(_) => EXIT_CHECK_FAILED,
        }
    }
}

/// Writes `text` to `path`, or to stdout when `path` is `None`.
pub fn emit(text: &str, path: Option<&PathBuf>) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.clone(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
