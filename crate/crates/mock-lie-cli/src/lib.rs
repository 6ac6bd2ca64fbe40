//! Command-line interface and file formats for the `mock-lie` library:
//! a plain-text algebra document format, deterministic JSON reports, and
//! the `mocklie` binary's command dispatch.

pub mod cli;
pub mod doc;
pub mod report;

pub use cli::run;
