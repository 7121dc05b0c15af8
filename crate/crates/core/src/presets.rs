//! Named Coxeter matrices.
//!
//! Recognised names: `A<n>`, `B<n>`, `D<n>`, `E6`–`E8`, `F4`, `G2`, `H3`,
//! `H4`, `I2_<m>` (also `I2(<m>)`) and `tA<n>` for the affine group `Ã_n`.
//! `B<n>` carries the 4 on its last edge, `E<n>` uses Bourbaki labelling
//! with node 2 attached to node 4.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::group::CoxeterSystem;
use crate::matrix::{CoxeterMatrix, MAX_RANK};

fn with_edges(rank: usize, edges: &[(usize, usize, u32)]) -> Option<CoxeterMatrix> {
    if rank == 0 || rank > MAX_RANK {
        return None;
    }
    let mut m = vec![2u32; rank * rank];
    for i in 0..rank {
        m[i * rank + i] = 1;
    }
    for &(a, b, order) in edges {
        m[(a - 1) * rank + (b - 1)] = order;
        m[(b - 1) * rank + (a - 1)] = order;
    }
    CoxeterMatrix::new(rank, m).ok()
}

fn path(rank: usize) -> Vec<(usize, usize, u32)> {
    (1..rank).map(|i| (i, i + 1, 3)).collect()
}

/// Coxeter matrix for a preset name, or `None` if the name is unknown.
pub fn matrix(name: &str) -> Option<CoxeterMatrix> {
    let num = |s: &str| s.parse::<usize>().ok();
    if let Some(rest) = name.strip_prefix("tA") {
        let n = num(rest)?;
        return match n {
            0 => None,
            1 => with_edges(2, &[(1, 2, 0)]),
            _ => {
                let mut edges = path(n + 1);
                edges.push((n + 1, 1, 3));
                with_edges(n + 1, &edges)
            }
        };
    }
    if let Some(rest) = name.strip_prefix("I2") {
        let m = rest
            .strip_prefix('_')
            .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))?;
        let m: u32 = m.parse().ok()?;
        if m < 2 {
            return None;
        }
        return with_edges(2, &[(1, 2, m)]);
    }
    match name {
        "E6" | "E7" | "E8" => {
            let n = num(&name[1..])?;
            let mut edges = vec![(1, 3, 3), (2, 4, 3)];
            edges.extend((3..n).map(|i| (i, i + 1, 3)));
            return with_edges(n, &edges);
        }
        "F4" => return with_edges(4, &[(1, 2, 3), (2, 3, 4), (3, 4, 3)]),
        "G2" => return with_edges(2, &[(1, 2, 6)]),
        "H3" => return with_edges(3, &[(1, 2, 5), (2, 3, 3)]),
        "H4" => return with_edges(4, &[(1, 2, 5), (2, 3, 3), (3, 4, 3)]),
        _ => {}
    }
    let (family, rest) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
    let n = num(rest)?;
    match family {
        "A" if n >= 1 => with_edges(n, &path(n)),
        "B" if n >= 2 => {
            let mut edges = path(n);
            edges.last_mut().unwrap().2 = 4;
            with_edges(n, &edges)
        }
        "D" if n >= 4 => {
            let mut edges = path(n - 1);
            edges.push((n - 2, n, 3));
            with_edges(n, &edges)
        }
        _ => None,
    }
}

/// Builds the system for a preset name, `None` if unknown.
pub fn system(name: &str) -> Option<CoxeterSystem> {
    matrix(name).map(CoxeterSystem::new).and_then(Result::ok)
}
