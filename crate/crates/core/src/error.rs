use alloc::boxed::Box;
use alloc::string::String;

use crate::masks::GreedyTrace;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the group, mask and matching layers.
///
/// Generator indices and mask positions carried by variants are 1-based.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("rank {rank} is not supported (expected 1..={max})")]
    InvalidRank { rank: usize, max: usize },
    #[error("coxeter matrix entry ({row}, {col}): {reason}")]
    InvalidMatrix {
        row: usize,
        col: usize,
        reason: &'static str,
    },
    #[error("generator {index} is out of range 1..={rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("word is not reduced: letter {position} lowers the length")]
    NotReduced { position: usize },
    #[error("cannot decide the sign of root coordinate {value:e}: within the precision margin")]
    Precision { value: f64 },
    #[error("root coordinate overflowed the 64-bit coefficient range")]
    Overflow,
    #[error("length guard of {limit} exceeded")]
    MaxLength { limit: usize },
    #[error("element is not below the expression's element (greedy remainder has length {})", .0.final_remainder().length())]
    NotBelow(Box<GreedyTrace>),
    #[error("lower element is not below the upper element in Bruhat order")]
    NotComparable,
    #[error("mask has length {got}, expression has length {expected}")]
    MaskLength { expected: usize, got: usize },
    #[error("mask is not constant: defect at position {position}")]
    NotConstant { position: usize },
    #[error("no move applies: the relative mask consists of all 1 entries")]
    NoMove,
    #[error("integrity violation: {0}")]
    Integrity(String),
}
