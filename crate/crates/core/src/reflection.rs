//! Reflection orders from a reduced word of the longest element, and the
//! comparison matching that pairs each element with the lower cover carrying
//! the largest label.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{CoxeterSystem, Element, ReducedExpression};
use crate::matching::{MatchedPair, Matching};

/// Total order `t_1 > t_2 > …` on the reflections of a finite group, read off
/// the inversion sequence of a reduced word of `w_0` that starts with the
/// reverse of a given reduced word.
#[derive(Debug, Clone)]
pub struct ReflectionOrder {
    base_word: Vec<usize>,
    words: Vec<Vec<usize>>,
    reflections: Vec<Element>,
    rank: BTreeMap<Element, usize>,
}

impl ReflectionOrder {
    /// The reduced word for `w_0` the order was built from.
    pub fn base_word(&self) -> &[usize] {
        &self.base_word
    }

    /// Reflections from largest to smallest.
    pub fn reflections(&self) -> &[Element] {
        &self.reflections
    }

    /// Palindromic words of the reflections, largest first.
    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.reflections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reflections.is_empty()
    }

    /// 0 for the largest reflection; `None` if `t` is not a reflection.
    pub fn position(&self, t: &Element) -> Option<usize> {
        self.rank.get(t).copied()
    }
}

/// Completes the reversed word of `expr` to a reduced word of `w_0` by
/// appending the smallest-index ascent until none remain. Fails with the
/// length guard in infinite groups.
pub fn reflection_order(sys: &CoxeterSystem, expr: &ReducedExpression) -> Result<ReflectionOrder> {
    let mut word: Vec<usize> = expr.letters().iter().rev().copied().collect();
    sys.check_guard(word.len())?;
    let mut cur = sys.product_of_word(&word)?;
    while let Some(i) = (1..=sys.rank()).find(|&i| !cur.has_right_descent(i)) {
        if word.len() >= sys.max_length() {
            return Err(Error::MaxLength {
                limit: sys.max_length(),
            });
        }
        cur = sys.mul_generator(&cur, i)?;
        word.push(i);
    }
    let mut words = Vec::with_capacity(word.len());
    let mut reflections = Vec::with_capacity(word.len());
    let mut rank = BTreeMap::new();
    for k in 0..word.len() {
        let mut t = word[..=k].to_vec();
        t.extend(word[..k].iter().rev());
        let elem = sys.product_of_word(&t)?;
        if rank.insert(elem.clone(), k).is_some() {
            return Err(Error::Integrity(format!(
                "reflection {} repeats in the inversion sequence",
                k + 1
            )));
        }
        words.push(t);
        reflections.push(elem);
    }
    Ok(ReflectionOrder {
        base_word: word,
        words,
        reflections,
        rank,
    })
}

/// Top-down matching: each unmatched element is paired with the lower cover
/// inside `[y, w]` whose label `t` (with `x' = x t`) is largest. Candidates
/// include already-matched covers; selecting one is an integrity error.
pub fn rw_match(sys: &CoxeterSystem, y: &Element, expr: &ReducedExpression) -> Result<Matching> {
    let order = reflection_order(sys, expr)?;
    let iv = sys.enumerate_interval(y, expr.element())?;
    let elems = iv.elements();
    let mut partner: Vec<Option<usize>> = vec![None; elems.len()];
    let mut pairs = Vec::new();
    for idx in (0..elems.len()).rev() {
        if partner[idx].is_some() {
            continue;
        }
        let x = &elems[idx];
        let x_inv = sys.inverse(x)?;
        let mut best: Option<(usize, usize)> = None;
        for lower in iv.lower_covers(idx) {
            let word = sys.canonical_word(&elems[lower])?;
            let t = sys.multiply_word(&x_inv, &word)?;
            let pos = order
                .position(&t)
                .ok_or_else(|| Error::Integrity("cover label is not a reflection".into()))?;
            match best {
                Some((p, _)) if p == pos => {
                    return Err(Error::Integrity("two covers share a label".into()))
                }
                Some((p, _)) if p < pos => {}
                _ => best = Some((pos, lower)),
            }
        }
        let Some((_, lower)) = best else { continue };
        if partner[lower].is_some() {
            return Err(Error::Integrity(
                "largest-label cover is already matched".into(),
            ));
        }
        partner[idx] = Some(lower);
        partner[lower] = Some(idx);
        pairs.push(MatchedPair {
            upper: x.clone(),
            lower: elems[lower].clone(),
            upper_move: None,
            lower_move: None,
        });
    }
    let unmatched = elems
        .iter()
        .zip(&partner)
        .filter(|(_, p)| p.is_none())
        .map(|(x, _)| x.clone())
        .collect();
    Ok(Matching::new(pairs, unmatched))
}
