use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::Element;
use crate::interval::HasseInterval;
use crate::matching::Matching;

/// Orients every cover edge downward, reverses the matched ones and looks for
/// a directed cycle. Returns `Ok(None)` when the matching is acyclic and
/// `Ok(Some(cycle))` with the cycle's vertices otherwise.
pub fn acyclicity_check(
    interval: &HasseInterval,
    matching: &Matching,
) -> Result<Option<Vec<Element>>> {
    let n = interval.len();
    let mut matched = BTreeSet::new();
    for pair in matching.pairs() {
        let (Some(u), Some(l)) = (
            interval.index_of(&pair.upper),
            interval.index_of(&pair.lower),
        ) else {
            return Err(Error::Integrity(
                "matched element outside the interval".into(),
            ));
        };
        if !interval.is_cover(&pair.upper, &pair.lower) {
            return Err(Error::Integrity("matched pair is not a cover edge".into()));
        }
        matched.insert((u, l));
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, l) in interval.covers() {
        if matched.contains(&(u, l)) {
            adj[l].push(u);
        } else {
            adj[u].push(l);
        }
    }

    // iterative DFS, 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        state[root] = 1;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if let Some(&u) = adj[v].get(*next) {
                *next += 1;
                match state[u] {
                    0 => {
                        state[u] = 1;
                        stack.push((u, 0));
                    }
                    1 => {
                        let start = stack.iter().position(|&(s, _)| s == u).unwrap();
                        let cycle = stack[start..]
                            .iter()
                            .map(|&(s, _)| interval.elements()[s].clone())
                            .collect();
                        return Ok(Some(cycle));
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    Ok(None)
}
