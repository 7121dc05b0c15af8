use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{CoxeterSystem, Element};

/// A Bruhat interval `[y, w]` with its Hasse diagram.
///
/// Elements are sorted by length (then by action matrix), so the bottom is
/// first and the top is last. Cover edges are index pairs `(upper, lower)`.
#[derive(Debug, Clone)]
pub struct HasseInterval {
    elements: Vec<Element>,
    index: BTreeMap<Element, usize>,
    covers: Vec<(usize, usize)>,
}

impl HasseInterval {
    pub fn bottom(&self) -> &Element {
        &self.elements[0]
    }

    pub fn top(&self) -> &Element {
        &self.elements[self.elements.len() - 1]
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: &Element) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.index.contains_key(x)
    }

    /// Cover edges `(upper, lower)` as indices into [`Self::elements`], sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, upper: &Element, lower: &Element) -> bool {
        match (self.index_of(upper), self.index_of(lower)) {
            (Some(u), Some(l)) => self.covers.binary_search(&(u, l)).is_ok(),
            _ => false,
        }
    }

    /// Lower covers of the element at `upper` inside the interval.
    pub fn lower_covers(&self, upper: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.covers.partition_point(|&(u, _)| u < upper);
        self.covers[start..]
            .iter()
            .take_while(move |&&(u, _)| u == upper)
            .map(|&(_, l)| l)
    }
}

impl CoxeterSystem {
    /// Enumerates `[y, w]` by walking down from `w` through coatoms, only
    /// expanding elements that still lie above `y`.
    pub fn enumerate_interval(&self, y: &Element, w: &Element) -> Result<HasseInterval> {
        self.check_guard(w.length())?;
        if !self.bruhat_leq(y, w)? {
            return Err(Error::NotComparable);
        }
        let mut seen: BTreeMap<Element, ()> = BTreeMap::new();
        let mut edges = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone(), ());
        queue.push_back(w.clone());
        while let Some(z) = queue.pop_front() {
            if z.length() == y.length() {
                continue;
            }
            for c in self.coatoms(&z)? {
                if !self.bruhat_leq(y, &c)? {
                    continue;
                }
                if !seen.contains_key(&c) {
                    seen.insert(c.clone(), ());
                    queue.push_back(c.clone());
                }
                edges.push((z.clone(), c));
            }
        }
        let elements: Vec<Element> = seen.into_keys().collect();
        let index: BTreeMap<Element, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, x)| (x, i))
            .collect();
        let mut covers: Vec<(usize, usize)> =
            edges.iter().map(|(u, l)| (index[u], index[l])).collect();
        covers.sort_unstable();
        covers.dedup();
        Ok(HasseInterval {
            elements,
            index,
            covers,
        })
    }
}
