//! Experiment runner behind the `recurra` binary: JSON configs in, CSV and
//! one-line reports out.

pub mod commands;
pub mod config;
mod error;
pub mod render;
pub mod sweep;

pub use error::{CliError, ExitCode};
