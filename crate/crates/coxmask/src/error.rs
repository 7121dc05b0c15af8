use std::io;
use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown group {0:?}: not a preset name or a readable matrix file")]
    UnknownGroup(String),
    #[error("bad word {text:?}: {reason}")]
    Word { text: String, reason: String },
    #[error("{path}:{line}:{column}: {reason}")]
    MatrixFile {
        path: String,
        line: usize,
        column: usize,
        reason: String,
    },
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Core(#[from] coxmask_core::Error),
}

impl Error {
    /// Process exit status: 1 for a violated property, 2 for bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Core(coxmask_core::Error::Integrity(_)) => 1,
            _ => 2,
        }
    }
}
