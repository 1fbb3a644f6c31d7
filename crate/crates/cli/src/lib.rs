//! File formats, reports and figures for the `momentcut` command.

pub mod commands;
pub mod spec;
pub mod svg;

pub use commands::{run, Command, Options, Outcome};
pub use spec::{JobSpec, SpecError};

/// Rank cap when `MOMENTCUT_MAX_RANK` is unset.
pub const DEFAULT_MAX_RANK: usize = momentcut_core::DEFAULT_MAX_RANK;
