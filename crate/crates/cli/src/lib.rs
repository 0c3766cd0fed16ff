//! Command line front end: a registry of subcommands producing JSON reports.

pub mod commands;
mod config;
mod error;
mod registry;
mod report;

pub use config::{Format, RunConfig, Source};
pub use error::CliError;
pub use registry::{Command, CommandRegistry, Outcome};
pub use report::{Assertion, Provenance, Report, Status};
