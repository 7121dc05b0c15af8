use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest rank accepted; descent sets are stored as 64-bit masks.
pub const MAX_RANK: usize = 64;

/// A Coxeter matrix `m(i, j)`.
///
/// Entries are stored as `u32` with `0` standing for `∞`, the same encoding
/// used by the matrix file format. Accessors take 0-based indices; error
/// messages report 1-based ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<u32>,
}

impl CoxeterMatrix {
    /// Validates and wraps a row-major `rank × rank` array.
    pub fn new(rank: usize, entries: Vec<u32>) -> Result<Self> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::InvalidRank {
                rank,
                max: MAX_RANK,
            });
        }
        if entries.len() != rank * rank {
            return Err(Error::InvalidMatrix {
                row: entries.len() / rank + 1,
                col: entries.len() % rank + 1,
                reason: "wrong number of entries",
            });
        }
        for i in 0..rank {
            for j in 0..rank {
                let m = entries[i * rank + j];
                let err = |reason| Error::InvalidMatrix {
                    row: i + 1,
                    col: j + 1,
                    reason,
                };
                if i == j {
                    if m != 1 {
                        return Err(err("diagonal entries must be 1"));
                    }
                } else {
                    if m == 1 {
                        return Err(err("off-diagonal entries must be at least 2 or infinite"));
                    }
                    if m != entries[j * rank + i] {
                        return Err(err("matrix is not symmetric"));
                    }
                }
            }
        }
        Ok(Self { rank, entries })
    }

    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        let rank = rows.len();
        let mut entries = Vec::with_capacity(rank * rank);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != rank {
                return Err(Error::InvalidMatrix {
                    row: i + 1,
                    col: row.len().min(rank) + 1,
                    reason: "row length differs from rank",
                });
            }
            entries.extend_from_slice(row);
        }
        Self::new(rank, entries)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Raw entry with `0` meaning `∞`.
    pub fn raw(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.rank + j]
    }

    /// `m(i, j)`, `None` when infinite.
    pub fn order(&self, i: usize, j: usize) -> Option<u32> {
        match self.raw(i, j) {
            0 => None,
            m => Some(m),
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }
}
