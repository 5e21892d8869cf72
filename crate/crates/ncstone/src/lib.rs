//! File formats and subcommands of the `ncstone` command line tool.
//!
//! Every subcommand is a thin adapter over `ncstone-core`: it loads its
//! input from a JSON file or a catalog key, calls one core operation and
//! serializes the result.

pub mod commands;
pub mod format;

pub use commands::{Failure, Format, Outcome};
