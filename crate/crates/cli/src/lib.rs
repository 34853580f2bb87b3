//! Workspace files and the `homlie` command line.

pub mod commands;
pub mod document;
pub mod workspace;

pub use commands::{run, Command};
pub use document::{Format, ReportDocument};
pub use workspace::{parse_spec, InputError, Workspace};

/// Reads and parses a workspace file.
pub fn load(path: &std::path::Path) -> Result<Workspace, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_spec(&text)
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
