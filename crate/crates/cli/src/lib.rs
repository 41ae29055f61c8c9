//! Presentation files, reports and subcommands for the `lgcone` binary.

pub mod commands;
pub mod export;
pub mod parse;
pub mod report;

pub use commands::{CliError, Loaded, Options};
pub use report::{Provenance, Report};
