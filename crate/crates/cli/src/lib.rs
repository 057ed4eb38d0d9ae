//! Command implementations behind the `hkrr` binary. Each command returns a
//! [`Report`] (or [`ChernReport`]) whose checks decide the exit status.

mod commands;
mod report;

pub use commands::{
    cmd_chern, cmd_chi, cmd_fujiki, cmd_rr, cmd_verify, load_gram, parse_gram, ChernReport, Suite,
};
pub use report::{poly_value, rational_list, Check, Report};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, family/`n` combinations, Gram files or slot specs.
    #[error("{0}")]
    Input(String),
    /// A computation that should succeed did not.
    #[error("{0}")]
    Math(hkrr_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

pub(crate) fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

impl From<hkrr_core::Error> for CliError {
    fn from(e: hkrr_core::Error) -> Self {
        CliError::Math(e)
    }
}
