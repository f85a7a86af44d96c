//! Configuration, commands and reports for the `gvmlab` binary.

pub mod commands;
pub mod config;
pub mod report;

pub use commands::{run, Command, RunError};
pub use config::{max_depth_from_env, JobConfig, UsageError, MAX_DEPTH_VAR};
pub use report::Report;
