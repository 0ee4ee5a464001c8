//! Std companion to `logfano-core`: input parsing, report documents, the
//! subcommands of the `logfano` binary and the verification suite.

pub mod checks;
pub mod commands;
pub mod config;
pub mod input;
pub mod report;

pub use logfano_core as core;
