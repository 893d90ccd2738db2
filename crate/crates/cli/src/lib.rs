//! Library side of the `homlab` command: input loading, command bodies and the verification suite.

pub mod commands;
pub mod error;
pub mod input;
pub mod verify;

pub use error::{CliError, CliResult};
