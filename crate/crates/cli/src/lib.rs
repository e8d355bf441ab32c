//! Library side of the `divdiff` command: file formats, built-in functions,
//! the subcommands and the verification suite.

pub mod builtin;
pub mod commands;
pub mod format;
pub mod verify;
