//! Library side of the command-line tool: the document format and the
//! subcommand report builders. The binary in `main.rs` is a thin wrapper.

pub mod commands;
pub mod document;
