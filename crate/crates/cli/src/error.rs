use std::fmt;
use std::io;

use serde::Serialize;

/// Process exit status for each failure class.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VALIDATION: i32 = 1;
    pub const VERIFICATION: i32 = 2;
}

#[derive(Debug)]
pub enum CliError {
    /// Rejected physical input, reported by the core crate.
    Physics(casimir_core::Error),
    /// Rejected command-line or config input.
    Usage(String),
    Io(io::Error),
    /// `verify` ran and at least one check failed.
    Verification {
        failed: usize,
        total: usize,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification { .. } => exit::VERIFICATION,
            _ => exit::VALIDATION,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Physics(e) => e.kind(),
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Verification { .. } => "verification_failed",
        }
    }

    pub fn report(&self) -> ErrorReport {
        ErrorReport { kind: self.kind(), message: self.to_string(), exit_code: self.exit_code() }
    }
}

/// Machine-readable form written to stderr under `--json`.
#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: i32,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Physics(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Verification { failed, total } => write!(f, "{failed} of {total} checks failed"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<casimir_core::Error> for CliError {
    fn from(e: casimir_core::Error) -> Self {
        CliError::Physics(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}
