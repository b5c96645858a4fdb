//! Command-line harness around the `abfactor` library: graph6 corpus
//! commands and check campaigns.

pub mod campaign;
pub mod commands;
pub mod config;

pub use commands::Exit;
