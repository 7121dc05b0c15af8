//! Coxeter matrix files: the rank on the first line, then one row per line
//! with whitespace-separated entries; `0` stands for `∞`.

use std::path::Path;

use coxmask_core::{CoxeterMatrix, Error as CoreError};

use crate::error::{Error, Result};

pub fn parse_matrix_file(path: &Path) -> Result<CoxeterMatrix> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_matrix(&text, &path.display().to_string())
}

/// Parses matrix text; `origin` names the source in error messages.
pub fn parse_matrix(text: &str, origin: &str) -> Result<CoxeterMatrix> {
    let err = |line: usize, column: usize, reason: String| Error::MatrixFile {
        path: origin.to_string(),
        line,
        column,
        reason,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines
        .next()
        .ok_or_else(|| err(1, 1, "empty file, expected the rank".into()))?;
    let rank: usize = header
        .parse()
        .map_err(|_| err(first, 1, format!("expected the rank, found {header:?}")))?;
    let mut rows = Vec::with_capacity(rank);
    let mut row_lines = Vec::with_capacity(rank);
    for (line, content) in lines {
        if rows.len() == rank {
            return Err(err(line, 1, format!("extra line after {rank} rows")));
        }
        let row = content
            .split_whitespace()
            .enumerate()
            .map(|(c, tok)| {
                tok.parse::<u32>()
                    .map_err(|_| err(line, c + 1, format!("{tok:?} is not an entry")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if row.len() != rank {
            return Err(err(
                line,
                row.len().min(rank) + 1,
                format!("expected {rank} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
        row_lines.push(line);
    }
    if rows.len() != rank {
        return Err(err(
            row_lines.last().copied().unwrap_or(first) + 1,
            1,
            format!("expected {rank} rows, found {}", rows.len()),
        ));
    }
    CoxeterMatrix::from_rows(&rows).map_err(|e| match e {
        CoreError::InvalidMatrix { row, col, reason } => {
            err(row_lines[row - 1], col, reason.into())
        }
        other => err(first, 1, other.to_string()),
    })
}
