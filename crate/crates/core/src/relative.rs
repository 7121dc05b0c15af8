//! Relative masks: three-valued vectors encoding a pair `y ≤ x ≤ w` on a
//! fixed reduced expression of `w`.
//!
//! `X` marks the positions where the constant mask `τ` of `x` is 0. The 0/1
//! entries, read on the subexpression `w^τ`, form the constant mask of `y`.
//! `X` contributes the identity to the prefix products `w^{σ[j]}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{CoxeterSystem, Element, ReducedExpression};
use crate::masks::{greedy_on_letters, prefixes_of, Mask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Zero,
    One,
    X,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeMask {
    letters: Vec<usize>,
    entries: Vec<Entry>,
    /// `w^{σ[j]}`
    prefixes: Vec<Element>,
    /// `w^{τ[j]}`
    x_prefixes: Vec<Element>,
}

impl RelativeMask {
    /// Wraps raw entries, computing the prefix caches. No validity check; see
    /// [`RelativeMask::validate`].
    pub fn from_entries(
        sys: &CoxeterSystem,
        expr: &ReducedExpression,
        entries: Vec<Entry>,
    ) -> Result<Self> {
        if entries.len() != expr.len() {
            return Err(Error::MaskLength {
                expected: expr.len(),
                got: entries.len(),
            });
        }
        Self::build(sys, expr.letters().to_vec(), entries)
    }

    pub(crate) fn build(
        sys: &CoxeterSystem,
        letters: Vec<usize>,
        entries: Vec<Entry>,
    ) -> Result<Self> {
        let prefixes = prefixes_of(sys, &letters, entries.iter().map(|&e| e == Entry::One))?;
        let x_prefixes = prefixes_of(sys, &letters, entries.iter().map(|&e| e != Entry::X))?;
        Ok(Self {
            letters,
            entries,
            prefixes,
            x_prefixes,
        })
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Entry at 1-based position `j`.
    pub fn entry(&self, j: usize) -> Entry {
        self.entries[j - 1]
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The encoded bottom element `y = w^σ`.
    pub fn element(&self) -> &Element {
        &self.prefixes[self.entries.len()]
    }

    /// The encoded intermediate element `x = w^τ`.
    pub fn x_element(&self) -> &Element {
        &self.x_prefixes[self.entries.len()]
    }

    /// `w^{σ[j]}`, `j` in `0..=p`.
    pub fn prefix(&self, j: usize) -> &Element {
        &self.prefixes[j]
    }

    /// `w^{τ[j]}`, `j` in `0..=p`.
    pub fn x_prefix(&self, j: usize) -> &Element {
        &self.x_prefixes[j]
    }

    pub fn x_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e == Entry::X).count()
    }

    pub fn x_positions(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&j| self.entry(j) == Entry::X)
            .collect()
    }

    pub fn is_all_ones(&self) -> bool {
        self.entries.iter().all(|&e| e == Entry::One)
    }

    /// `w_j` is a right descent of `w^{σ[j-1]}`.
    pub fn is_defect(&self, j: usize) -> bool {
        self.prefixes[j - 1].has_right_descent(self.letters[j - 1])
    }

    /// `w^{τ[j-1]} ≥ w^{σ[j]}` in Bruhat order.
    pub fn is_shifted_descent(&self, sys: &CoxeterSystem, j: usize) -> Result<bool> {
        sys.bruhat_leq(&self.prefixes[j], &self.x_prefixes[j - 1])
    }

    /// Checks that the X-mask is constant and that no 0/1 entry is a defect.
    pub fn validate(&self) -> Result<()> {
        for j in 1..=self.len() {
            let letter = self.letters[j - 1];
            if self.x_prefixes[j - 1].has_right_descent(letter) {
                return Err(Error::Integrity(format!(
                    "X-mask has a defect at position {j}"
                )));
            }
            if self.entry(j) != Entry::X && self.is_defect(j) {
                return Err(Error::Integrity(format!(
                    "non-X entry at position {j} is a defect"
                )));
            }
        }
        Ok(())
    }

    /// Display labels: `0`, `1`, `X`, or `X^d` for a defect `X`.
    pub fn labels(&self) -> Vec<&'static str> {
        (1..=self.len())
            .map(|j| match self.entry(j) {
                Entry::Zero => "0",
                Entry::One => "1",
                Entry::X if self.is_defect(j) => "X^d",
                Entry::X => "X",
            })
            .collect()
    }
}

/// Relative mask for `y ≤ x ≤ w` on `expr`.
pub fn build_relative_mask(
    sys: &CoxeterSystem,
    expr: &ReducedExpression,
    x: &Element,
    y: &Element,
) -> Result<RelativeMask> {
    let (tau, trace) = greedy_on_letters(sys, expr.letters(), x)?;
    if !trace.final_remainder().is_identity() {
        return Err(Error::NotComparable);
    }
    let sub = tau.subword(expr.letters());
    let (nu, trace) = greedy_on_letters(sys, &sub, y)?;
    if !trace.final_remainder().is_identity() {
        return Err(Error::NotComparable);
    }
    let mut nu_bits = nu.bits().iter();
    let entries = tau
        .bits()
        .iter()
        .map(|&t| match t {
            false => Entry::X,
            true if nu_bits.next() == Some(&true) => Entry::One,
            true => Entry::Zero,
        })
        .collect();
    RelativeMask::build(sys, expr.letters().to_vec(), entries)
}

/// The X-mask `Ξ(σ)`.
pub fn xmask_of(rm: &RelativeMask) -> Mask {
    Mask::new(rm.entries.iter().map(|&e| e != Entry::X).collect())
}

/// Defect positions of a relative mask (1-based).
pub fn relative_defect_profile(rm: &RelativeMask) -> Vec<usize> {
    (1..=rm.len()).filter(|&j| rm.is_defect(j)).collect()
}

/// Shifted descent positions of a relative mask (1-based).
pub fn shifted_descent_set(sys: &CoxeterSystem, rm: &RelativeMask) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for j in 1..=rm.len() {
        if rm.is_shifted_descent(sys, j)? {
            out.push(j);
        }
    }
    Ok(out)
}

/// Every `x ∈ [y, w]` with its relative mask for `y` on `expr`.
pub fn interval_as_relative_masks(
    sys: &CoxeterSystem,
    y: &Element,
    expr: &ReducedExpression,
) -> Result<BTreeMap<Element, RelativeMask>> {
    let interval = sys.enumerate_interval(y, expr.element())?;
    interval
        .elements()
        .iter()
        .map(|x| Ok((x.clone(), build_relative_mask(sys, expr, x, y)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use Entry::{One as I, Zero as O, X};

    fn setup() -> (CoxeterSystem, ReducedExpression) {
        let sys = presets::system("A3").unwrap();
        let expr = ReducedExpression::new(&sys, alloc::vec![2, 1, 3, 2]).unwrap();
        (sys, expr)
    }

    #[test]
    fn builds_table_rows() {
        let (sys, expr) = setup();
        let p = |w: &[usize]| sys.product_of_word(w).unwrap();
        let s2 = p(&[2]);
        let rm = build_relative_mask(&sys, &expr, &p(&[2, 3]), &s2).unwrap();
        assert_eq!(rm.entries(), &[I, X, O, X]);
        assert_eq!(relative_defect_profile(&rm), alloc::vec![4]);
        assert_eq!(rm.labels(), alloc::vec!["1", "X", "0", "X^d"]);
        assert_eq!(xmask_of(&rm), Mask::from_digits(&[1, 0, 1, 0]));
        assert_eq!(rm.x_element(), &p(&[2, 3]));

        let rm = build_relative_mask(&sys, &expr, &p(&[1, 3, 2]), &s2).unwrap();
        assert_eq!(rm.entries(), &[X, O, O, I]);
        assert!(relative_defect_profile(&rm).is_empty());

        let w = expr.element().clone();
        let rm = build_relative_mask(&sys, &expr, &w, &w).unwrap();
        assert!(rm.is_all_ones());
        assert_eq!(xmask_of(&rm), Mask::ones(4));
        assert!(relative_defect_profile(&rm).is_empty());

        let rm = build_relative_mask(&sys, &expr, &s2, &s2).unwrap();
        assert_eq!(rm.entries(), &[X, X, X, I]);
        assert_eq!(xmask_of(&rm), Mask::from_digits(&[0, 0, 0, 1]));
    }

    #[test]
    fn ordering_errors() {
        let (sys, expr) = setup();
        let p = |w: &[usize]| sys.product_of_word(w).unwrap();
        assert_eq!(
            build_relative_mask(&sys, &expr, &p(&[1, 3]), &p(&[2])).unwrap_err(),
            Error::NotComparable
        );
        assert_eq!(
            build_relative_mask(&sys, &expr, &p(&[3, 2, 1]), &p(&[1])).unwrap_err(),
            Error::NotComparable
        );
    }

    #[test]
    fn shifted_descents() {
        let (sys, expr) = setup();
        let rm = RelativeMask::from_entries(&sys, &expr, alloc::vec![O, X, O, I]).unwrap();
        assert!(rm.is_shifted_descent(&sys, 4).unwrap());
        let rm = RelativeMask::from_entries(&sys, &expr, alloc::vec![X, O, O, I]).unwrap();
        assert!(!rm.is_shifted_descent(&sys, 4).unwrap());
        // the τ-prefix is one letter shorter than the σ-prefix, so no position
        // of an all-ones mask can be a shifted descent
        let rm = RelativeMask::from_entries(&sys, &expr, alloc::vec![I; 4]).unwrap();
        assert!(shifted_descent_set(&sys, &rm).unwrap().is_empty());
    }

    #[test]
    fn interval_maps() {
        let (sys, expr) = setup();
        let s2 = sys.product_of_word(&[2]).unwrap();
        let map = interval_as_relative_masks(&sys, &s2, &expr).unwrap();
        assert_eq!(map.len(), 10);
        for (x, rm) in &map {
            assert_eq!(rm.x_element(), x);
            assert_eq!(rm.element(), &s2);
            assert_eq!(rm.x_count(), 4 - x.length());
            rm.validate().unwrap();
        }
        let w = expr.element().clone();
        let map = interval_as_relative_masks(&sys, &w, &expr).unwrap();
        assert_eq!(map.len(), 1);
        assert!(map[&w].is_all_ones());
    }

    #[test]
    fn affine_a1_interval() {
        let sys = presets::system("tA1").unwrap();
        let expr = ReducedExpression::new(&sys, alloc::vec![1, 2, 1]).unwrap();
        let s1 = sys.product_of_word(&[1]).unwrap();
        let map = interval_as_relative_masks(&sys, &s1, &expr).unwrap();
        let iv = sys.enumerate_interval(&s1, expr.element()).unwrap();
        assert_eq!(map.len(), iv.len());
        assert_eq!(map.len(), 4);
        let mut xcounts: alloc::vec::Vec<_> = map.values().map(|rm| rm.x_count()).collect();
        xcounts.sort();
        assert_eq!(xcounts, alloc::vec![0, 1, 1, 2]);
    }
}
