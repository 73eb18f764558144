//! Command-line front end for the `mmwave_core` attenuation models.

pub mod args;
pub mod bands;
pub mod commands;
pub mod error;
pub mod format;
pub mod presets;
pub mod scenario_file;
pub mod sweep;

pub use args::Cli;
pub use error::{CliError, CliResult};
