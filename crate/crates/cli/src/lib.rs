//! Front end for vertex, capping and verification jobs with JSON reports.

pub mod config;
mod error;
pub mod parse;
pub mod report;
pub mod run;
mod suites;

pub use config::{Command, Job, JobConfig, Mode, Suite};
pub use error::CliError;
pub use parse::{parse_descendent, parse_rational, rational_text};
pub use report::{Check, Report, Status};
pub use run::run;
pub use suites::run_suite;
