//! Plain-text layouts for masks, relative-mask tables and matchings.

use std::collections::BTreeMap;
use std::fmt::Write;

use coxmask_core::{
    interval_as_relative_masks, xmask_of, CoxeterSystem, Element, GreedyTrace, Mask, Matching,
    ReducedExpression, RelativeMask,
};

use crate::error::Result;
use crate::word::format_word;

fn row(cells: &[String], width: usize) -> String {
    let line = cells
        .iter()
        .map(|c| format!("{c:<width$}"))
        .collect::<Vec<_>>()
        .join(" ");
    line.trim_end().to_string()
}

fn letter_cells(expr: &ReducedExpression) -> Vec<String> {
    expr.letters().iter().map(|i| format!("s{i}")).collect()
}

fn bit_cells(mask: &Mask) -> Vec<String> {
    mask.bits()
        .iter()
        .map(|&b| u8::from(b).to_string())
        .collect()
}

/// The subexpression `w^τ` picked out by the X-mask.
pub fn subexpression(rm: &RelativeMask) -> Vec<usize> {
    xmask_of(rm).subword(rm.letters())
}

/// Letters over mask bits, then the greedy remainders `r_{p+1}, …, r_1`.
pub fn constant_mask(
    sys: &CoxeterSystem,
    expr: &ReducedExpression,
    mask: &Mask,
    trace: &GreedyTrace,
) -> Result<String> {
    let letters = letter_cells(expr);
    let width = letters.iter().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    writeln!(out, "{}", row(&letters, width)).unwrap();
    writeln!(out, "{}", row(&bit_cells(mask), width)).unwrap();
    for i in (1..=trace.len()).rev() {
        let word = sys.canonical_word(trace.remainder(i))?;
        writeln!(out, "r{i} = {}", format_word(&word)).unwrap();
    }
    Ok(out)
}

/// Rows ordered by decreasing X-mask length, then by decreasing X-mask.
fn table_order(masks: &BTreeMap<Element, RelativeMask>) -> Vec<&RelativeMask> {
    let mut rows: Vec<&RelativeMask> = masks.values().collect();
    rows.sort_by(|a, b| {
        a.x_count()
            .cmp(&b.x_count())
            .then_with(|| xmask_of(b).cmp(&xmask_of(a)))
    });
    rows
}

/// The relative masks of `[y, w]` with their X-masks and subexpressions.
pub fn interval_table(
    sys: &CoxeterSystem,
    expr: &ReducedExpression,
    y: &Element,
) -> Result<String> {
    let masks = interval_as_relative_masks(sys, y, expr)?;
    let rows = table_order(&masks);
    let letters = letter_cells(expr);
    let width = rows
        .iter()
        .flat_map(|rm| rm.labels())
        .map(str::len)
        .chain(letters.iter().map(String::len))
        .max()
        .unwrap_or(1);
    let block = letters.len() * (width + 1);
    let mut out = String::new();
    writeln!(
        out,
        "    {:<block$}      {:<block$}  subexpression",
        row(&letters, width),
        row(&letters, width),
    )
    .unwrap();
    for rm in rows {
        let sigma: Vec<String> = rm.labels().iter().map(|s| s.to_string()).collect();
        let line = format!(
            "σ = {:<block$}  τ = {:<block$}  {}",
            row(&sigma, width),
            row(&bit_cells(&xmask_of(rm)), width),
            format_word(&subexpression(rm)),
        );
        writeln!(out, "{line}").unwrap();
    }
    Ok(out)
}

/// Matched pairs grouped by rank, top first, each element named by its
/// subexpression of `expr`.
pub fn matching(
    sys: &CoxeterSystem,
    expr: &ReducedExpression,
    y: &Element,
    m: &Matching,
) -> Result<String> {
    let masks = interval_as_relative_masks(sys, y, expr)?;
    let name = |x: &Element| format_word(&subexpression(&masks[x]));
    let mask = |x: &Element| masks[x].labels().join(" ");
    let width = m
        .pairs()
        .iter()
        .map(|p| name(&p.upper).len())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    let mut rank = None;
    for p in m.pairs() {
        let l = p.upper.length();
        if rank != Some(l) {
            writeln!(out, "rank {l} -> {}", l - 1).unwrap();
            rank = Some(l);
        }
        let mut line = format!("  {:<width$}  >  {}", name(&p.upper), name(&p.lower));
        if let Some(mv) = p.upper_move {
            write!(
                line,
                "    [{}] <-> [{}]  rule {} at position {}",
                mask(&p.upper),
                mask(&p.lower),
                mv.rule.number(),
                mv.position
            )
            .unwrap();
        }
        writeln!(out, "{line}").unwrap();
    }
    let unmatched: Vec<String> = m.unmatched().iter().map(name).collect();
    if unmatched.is_empty() {
        writeln!(out, "unmatched: none").unwrap();
    } else {
        writeln!(out, "unmatched: {}", unmatched.join(", ")).unwrap();
    }
    writeln!(
        out,
        "{} pairs, {} unmatched",
        m.pairs().len(),
        unmatched.len()
    )
    .unwrap();
    Ok(out)
}
