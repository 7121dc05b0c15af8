//! DOT export of a matched Hasse diagram. Cover edges point down; matched
//! edges are reversed and drawn bold, so the file is the digraph whose
//! acyclicity the matching asserts.

use std::fmt::Write;
use std::path::Path;

use coxmask_core::{CoxeterSystem, HasseInterval, Matching};

use crate::error::{Error, Result};
use crate::word::format_word;

pub fn render_dot(sys: &CoxeterSystem, interval: &HasseInterval, m: &Matching) -> Result<String> {
    let elems = interval.elements();
    let mut keyed = Vec::with_capacity(elems.len());
    for (idx, x) in elems.iter().enumerate() {
        keyed.push(((x.length(), sys.canonical_word(x)?), idx));
    }
    keyed.sort();
    let mut node = vec![0; elems.len()];
    for (n, (_, idx)) in keyed.iter().enumerate() {
        node[*idx] = n;
    }
    let matched = m.pair_set();

    let mut out = String::from("digraph interval {\n");
    for (n, ((_, word), _)) in keyed.iter().enumerate() {
        writeln!(out, "  n{n} [label=\"{}\"];", format_word(word)).unwrap();
    }
    let mut edges: Vec<(usize, usize, bool)> = interval
        .covers()
        .iter()
        .map(|&(u, l)| {
            if matched.contains(&(elems[u].clone(), elems[l].clone())) {
                (node[l], node[u], true)
            } else {
                (node[u], node[l], false)
            }
        })
        .collect();
    edges.sort();
    for (from, to, bold) in edges {
        let style = if bold { " [style=bold]" } else { "" };
        writeln!(out, "  n{from} -> n{to}{style};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn export_dot(
    sys: &CoxeterSystem,
    interval: &HasseInterval,
    m: &Matching,
    path: &Path,
) -> Result<()> {
    let text = render_dot(sys, interval, m)?;
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
