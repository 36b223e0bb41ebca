//! Library side of the `sicgram` command: argument parsing, the command
//! implementations, and the SVG plot emitter.

pub mod app;
pub mod svg;

pub use app::{run, Cli, Command};
