//! Command-line front end: instance files, report files, the subcommand
//! drivers, and the smooth-category counterexample demo.

pub mod commands;
pub mod demo;
pub mod instance;
pub mod report;

use std::fmt;

use pseudobundle_core::Error as CoreError;

/// CLI-level error carrying its process exit code:
/// 1 usage/parse, 2 budget exhausted, 3 point not on the variety.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Core(CoreError::BudgetExhausted { .. }) => 2,
            CliError::Core(CoreError::PointNotOnVariety { .. }) => 3,
            CliError::Core(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(err) => write!(f, "{err}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        CliError::Core(err)
    }
}

pub type CliResult<T> = Result<T, CliError>;
