//! Brute-force oracles. None of these go through `bruhat_leq` or the greedy
//! mask algorithm, so they can cross-check both.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{CoxeterSystem, Element, ReducedExpression};
use crate::interval::HasseInterval;
use crate::masks::Mask;
use crate::matching::match_interval;

/// Longest expression the subword oracles will enumerate.
pub const ORACLE_MAX_LEN: usize = 20;

fn guard(expr: &ReducedExpression) -> Result<()> {
    if expr.len() > ORACLE_MAX_LEN {
        return Err(Error::MaxLength {
            limit: ORACLE_MAX_LEN,
        });
    }
    Ok(())
}

/// `x ≤ w` by searching for a subword of `expr` with `l(x)` letters whose
/// product is `x`.
pub fn leq_oracle(sys: &CoxeterSystem, expr: &ReducedExpression, x: &Element) -> Result<bool> {
    guard(expr)?;
    fn search(
        sys: &CoxeterSystem,
        letters: &[usize],
        cur: &Element,
        need: usize,
        target: &Element,
    ) -> Result<bool> {
        if need == 0 {
            return Ok(cur == target);
        }
        if letters.len() < need {
            return Ok(false);
        }
        let next = sys.mul_generator(cur, letters[0])?;
        if search(sys, &letters[1..], &next, need - 1, target)? {
            return Ok(true);
        }
        search(sys, &letters[1..], cur, need, target)
    }
    search(sys, expr.letters(), &sys.identity(), x.length(), x)
}

/// Enumerates all `2^p` masks on `expr` and groups the defect-free ones by
/// the element they evaluate to.
pub fn constant_masks_by_enumeration(
    sys: &CoxeterSystem,
    expr: &ReducedExpression,
) -> Result<BTreeMap<Element, Vec<Mask>>> {
    guard(expr)?;
    let letters = expr.letters();
    let mut out: BTreeMap<Element, Vec<Mask>> = BTreeMap::new();
    let mut bits = Vec::with_capacity(letters.len());
    fn walk(
        sys: &CoxeterSystem,
        letters: &[usize],
        cur: &Element,
        has_defect: bool,
        bits: &mut Vec<bool>,
        out: &mut BTreeMap<Element, Vec<Mask>>,
    ) -> Result<()> {
        let j = bits.len();
        if j == letters.len() {
            if !has_defect {
                out.entry(cur.clone())
                    .or_default()
                    .push(Mask::new(bits.clone()));
            }
            return Ok(());
        }
        let letter = letters[j];
        let defect = has_defect || cur.has_right_descent(letter);
        bits.push(false);
        walk(sys, letters, cur, defect, bits, out)?;
        bits.pop();
        let next = sys.mul_generator(cur, letter)?;
        bits.push(true);
        walk(sys, letters, &next, defect, bits, out)?;
        bits.pop();
        Ok(())
    }
    walk(sys, letters, &sys.identity(), false, &mut bits, &mut out)?;
    Ok(out)
}

/// `μ(y, w)` by the defining recursion `μ(y, y) = 1`,
/// `μ(y, z) = −Σ_{y ≤ u < z} μ(y, u)`, with the order taken from the
/// transitive closure of the interval's cover edges.
pub fn mobius_oracle(interval: &HasseInterval) -> i64 {
    let n = interval.len();
    let words = n.div_ceil(64);
    let mut below = vec![vec![0u64; words]; n];
    for i in 0..n {
        below[i][i / 64] |= 1 << (i % 64);
        let lowers: Vec<usize> = interval.lower_covers(i).collect();
        for l in lowers {
            debug_assert!(l < i);
            let (head, tail) = below.split_at_mut(i);
            for (dst, src) in tail[0].iter_mut().zip(&head[l]) {
                *dst |= *src;
            }
        }
    }
    let mut mu = vec![0i64; n];
    for z in 0..n {
        if z == 0 {
            mu[z] = 1;
            continue;
        }
        let mut sum = 0;
        for u in 0..z {
            if below[z][u / 64] >> (u % 64) & 1 == 1 {
                sum += mu[u];
            }
        }
        mu[z] = -sum;
    }
    mu[n - 1]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MobiusReport {
    /// `Σ (−1)^{l(w)−l(x)}` over the elements left unmatched.
    pub survivor_sum: i64,
    /// `(−1)^{l(w)−l(y)}`.
    pub mobius: i64,
}

/// Cancels matched pairs in `Σ_{x ∈ [y,w]} (−1)^{l(w)−l(x)}` and reports the
/// survivors' contribution next to `(−1)^{l(w)−l(y)}`.
pub fn mobius_via_matching(
    sys: &CoxeterSystem,
    y: &Element,
    expr: &ReducedExpression,
) -> Result<MobiusReport> {
    let m = match_interval(sys, y, expr)?;
    let top = expr.element().length();
    let sign = |len: usize| if (top - len).is_multiple_of(2) { 1 } else { -1 };
    let mut survivor_sum = 0;
    for pair in m.pairs() {
        if sign(pair.upper.length()) + sign(pair.lower.length()) != 0 {
            return Err(Error::Integrity("matched pair does not cancel".into()));
        }
    }
    for x in m.unmatched() {
        survivor_sum += sign(x.length());
    }
    Ok(MobiusReport {
        survivor_sum,
        mobius: sign(y.length()),
    })
}
