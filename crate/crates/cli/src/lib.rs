//! Command-line front end: CSV and SVG output, configuration files and the
//! verification suite.

pub mod cli;
pub mod config;
pub mod error;
pub mod export;
pub mod figures;
pub mod format;
pub mod svg;
pub mod verify;

pub use error::{CliError, Result};
