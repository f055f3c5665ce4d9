//! State files, simulation CSV, verification suites and the command-line
//! front end over [`concurrence_core`].

pub mod commands;
pub mod error;
pub mod simulate;
pub mod statefile;
pub mod table;
pub mod verify;

pub use error::{exit, CliError, CliResult};
