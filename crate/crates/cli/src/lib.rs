//! File formats, the `monofact` command line and the verification suite.

pub mod commands;
pub mod document;
pub mod selection;
pub mod verify;
pub mod witness;

pub use commands::{run_command, Outcome};
