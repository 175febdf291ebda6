//! Error taxonomy shared by every module in the crate.

use thiserror::Error;

/// Unified error type for the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid parameter or specification (bad ratios, seeds, grids, ...).
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Input outside an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally valid arguments used together incorrectly
    /// (mismatched lengths, incompatible grids, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// Malformed text input; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A documented precondition does not hold (e.g. disconnected input).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Problem size exceeds what the selected algorithm supports.
    #[error("capability exceeded: {0}")]
    Capability(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
