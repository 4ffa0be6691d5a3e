//! Command-line driver for `tchebff-core`: expression parsers, a parallel
//! scan, and JSON / CSV / TSV report formats.

pub mod cli;
pub mod parallel;
pub mod parse;
pub mod report;

pub use cli::{run, Cli, CliError, Outcome};
