//! Library surface of the `polyq` command-line tool: the document format
//! and the command handlers, kept callable for integration tests.

pub mod app;
pub mod io;
