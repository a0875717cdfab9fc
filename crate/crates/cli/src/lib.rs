//! Deterministic CSV sweeps over the quantities of `raysearch-core`.
//!
//! Every table starts with `#` comment lines carrying the tool version, the
//! full configuration and the column units, followed by a column-name row.
//! Rows may be computed in parallel but are always written in grid order.

pub mod commands;
pub mod config;
pub mod error;
pub mod table;

pub use commands::run;
pub use config::{Command, Common, Method, SweepConfig};
pub use error::CliError;
pub use table::Table;
