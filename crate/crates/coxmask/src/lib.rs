//! Command-line front end, file formats and the exhaustive verification
//! driver for [`coxmask_core`].

pub mod cli;
pub mod dot;
mod error;
pub mod group;
pub mod matrix_file;
pub mod render;
pub mod suite;
pub mod word;

pub use error::{Error, Result};
pub use group::GroupSpec;
pub use suite::{run_suite, Check, SuiteConfig, SuiteReport};
