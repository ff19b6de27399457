//! Command-line front end: algebra catalog, JSON reports, matrix export and a
//! result cache.

mod args;
mod cache;
mod catalog;
mod config;
mod error;
mod report;
mod run;

pub use args::{Cli, Command, CACHE_ENV};
pub use cache::Cache;
pub use catalog::{graded, representation, AlgebraDescriptor};
pub use config::{RunConfig, Verb};
pub use error::{CliError, Result};
pub use report::{Check, Report, Timing, SCHEMA_VERSION};
pub use run::{export_matrix, run, MATRIX_NAMES};
