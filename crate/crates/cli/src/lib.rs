//! Front end for the `casimir` binary: configuration parsing and the
//! `force`, `sweep`, `figure` and `ingest-optical` commands.
//!
//! Exit codes: 0 success, 2 configuration or input error, 3 numerical failure.

pub mod commands;
pub mod config;

use thiserror::Error;

pub use commands::{
    cmd_figure, cmd_force, cmd_ingest_optical, cmd_sweep, default_figure_range, evaluate_at, Figure,
    ForceReport, IngestReport, Spacing, SweepOutput, SweepRange,
};
pub use config::{parse_quantity, GeometrySpec, QuantityChoice, RunConfig, Settings, Unit};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}
