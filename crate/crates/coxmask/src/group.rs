use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use coxmask_core::{presets, CoxeterMatrix, CoxeterSystem};

use crate::error::{Error, Result};
use crate::matrix_file::parse_matrix_file;

/// A preset name such as `A3`, `I2_5` or `tA2`, or a path to a matrix file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Preset(String),
    File(PathBuf),
}

impl GroupSpec {
    pub fn matrix(&self) -> Result<CoxeterMatrix> {
        match self {
            GroupSpec::Preset(name) => {
                presets::matrix(name).ok_or_else(|| Error::UnknownGroup(name.clone()))
            }
            GroupSpec::File(path) => parse_matrix_file(path),
        }
    }

    /// The system with its length guard set to `max_length`.
    pub fn system(&self, max_length: usize) -> Result<CoxeterSystem> {
        Ok(CoxeterSystem::new(self.matrix()?)?.with_max_length(max_length))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if presets::matrix(s).is_some() {
            Ok(GroupSpec::Preset(s.to_string()))
        } else if Path::new(s).is_file() {
            Ok(GroupSpec::File(PathBuf::from(s)))
        } else {
            Err(Error::UnknownGroup(s.to_string()))
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Preset(name) => f.write_str(name),
            GroupSpec::File(path) => write!(f, "{}", path.display()),
        }
    }
}
