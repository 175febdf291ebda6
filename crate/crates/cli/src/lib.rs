//! Command-line harness for the network reduction toolkit: experiment
//! configuration, orchestration, dataset manifests and the CSV/JSON
//! artifact formats.

pub mod config;
pub mod experiment;
pub mod formats;
pub mod manifest;
pub mod table2;

use netshrink_core::error::Error;

/// Process exit code for an error: 2 config, 3 data, 4 capability.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Config(_) | Error::Domain(_) | Error::Usage(_) | Error::Precondition(_) => 2,
        Error::Parse { .. } | Error::Io(_) => 3,
        Error::Capability(_) => 4,
    }
}
