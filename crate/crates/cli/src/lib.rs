//! Library side of the `npnsig` command-line tool.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod generate;

pub use error::{CliError, Result};
