//! Check suites and command implementations behind the `sphereconv` binary.

pub mod checks;
pub mod commands;
pub mod config;
pub mod suites;

pub use config::RunConfig;
pub use suites::{run_suite, SuiteReport, SUITES};
