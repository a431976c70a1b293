//! Library half of the `structmv` command-line tool: instance file formats
//! and the verb implementations.

pub mod commands;
pub mod error;
pub mod files;

pub use error::CliError;
