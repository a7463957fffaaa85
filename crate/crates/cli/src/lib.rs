//! Library half of the `leibniz3` command-line tool: the on-disk JSON format
//! with loaders and encoders, and the report renderer shared by every
//! subcommand. The binary in `main.rs` is a thin dispatcher over these.

pub mod format;
pub mod render;
