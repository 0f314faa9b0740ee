//! Command-line surface: tiling documents, exporters, tables and the
//! subcommand dispatcher.

pub mod app;
pub mod document;
pub mod export;
pub mod tables;

pub use app::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE, TOL_ENV};
pub use document::{DocumentError, Provenance, TilingDocument, SCHEMA_VERSION};
pub use export::{to_obj, to_svg};
