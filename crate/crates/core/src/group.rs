//! Coxeter systems acting on their geometric representation.
//!
//! An [`Element`] is stored as the matrix of its action on the simple roots,
//! together with its length and right descent set. Both are maintained
//! incrementally: `l(x s_i) = l(x) ± 1` according to the sign of `x(α_i)`, and
//! `s_i` is a right descent of `x` exactly when `x(α_i)` is a negative root.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::matrix::CoxeterMatrix;
use crate::scalar::{Coefficient, ScalarRing, Sign};

/// Default bound for search-like operations in possibly infinite groups.
pub const DEFAULT_MAX_LENGTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A group element.
///
/// Equality, hashing and ordering only look at the action matrix, which is
/// exact. The ordering sorts by length first.
#[derive(Clone)]
pub struct Element {
    coords: Box<[i64]>,
    length: usize,
    descents: u64,
}

impl Element {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Right descents as a bitmask, bit `i - 1` for generator `s_i`.
    pub fn right_descent_mask(&self) -> u64 {
        self.descents
    }

    /// Whether the 1-based generator `s_i` is a right descent.
    pub fn has_right_descent(&self, i: usize) -> bool {
        (1..=64).contains(&i) && self.descents >> (i - 1) & 1 == 1
    }

    /// Right descents in increasing order, 1-based.
    pub fn right_descents(&self) -> Vec<usize> {
        (0..64)
            .filter(|b| self.descents >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }

    /// Raw action matrix: column `k` is the image of `α_k`, each coordinate a
    /// block of ring coefficients.
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Element")
            .field("length", &self.length)
            .field("right_descents", &self.right_descents())
            .finish()
    }
}

/// A Coxeter system with its geometric representation. Immutable once built.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    ring: ScalarRing,
    /// `coefficients[i * n + k]` multiplies `x(α_i)` into the new `x(α_k)`.
    coefficients: Vec<Coefficient>,
    identity: Element,
    max_length: usize,
}

impl CoxeterSystem {
    /// Builds the geometric representation `s_i(v) = v − 2B(α_i, v)α_i` with
    /// `B(α_i, α_j) = −cos(π/m(i, j))` (`−1` for `m = ∞`).
    pub fn new(matrix: CoxeterMatrix) -> Result<Self> {
        let n = matrix.rank();
        let ring = ScalarRing::for_orders(
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|(i, j)| i != j)
                .filter_map(|(i, j)| matrix.order(i, j)),
        );
        let mut coefficients = Vec::with_capacity(n * n);
        for i in 0..n {
            for k in 0..n {
                coefficients.push(if i == k {
                    Coefficient::Zero
                } else {
                    ring.coefficient(matrix.order(i, k))
                });
            }
        }
        let d = ring.degree();
        let mut coords = vec![0i64; n * n * d];
        for k in 0..n {
            coords[(k * n + k) * d] = 1;
        }
        let identity = Element {
            coords: coords.into_boxed_slice(),
            length: 0,
            descents: 0,
        };
        Ok(Self {
            matrix,
            ring,
            coefficients,
            identity,
            max_length: DEFAULT_MAX_LENGTH,
        })
    }

    /// Replaces the length guard used by search-like operations.
    pub fn with_max_length(mut self, limit: usize) -> Self {
        self.max_length = limit;
        self
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn ring(&self) -> &ScalarRing {
        &self.ring
    }

    pub fn identity(&self) -> Element {
        self.identity.clone()
    }

    pub(crate) fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::GeneratorOutOfRange {
                index: i,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_guard(&self, length: usize) -> Result<()> {
        if length > self.max_length {
            Err(Error::MaxLength {
                limit: self.max_length,
            })
        } else {
            Ok(())
        }
    }

    /// The simple reflection `s_i` (1-based).
    pub fn generator(&self, i: usize) -> Result<Element> {
        self.mul_generator(&self.identity, i)
    }

    /// Right multiplication `x · s_i` (1-based `i`).
    pub fn mul_generator(&self, x: &Element, i: usize) -> Result<Element> {
        self.check_generator(i)?;
        self.mul_gen0(x, i - 1)
    }

    pub(crate) fn mul_gen0(&self, x: &Element, i: usize) -> Result<Element> {
        let n = self.rank();
        let d = self.ring.degree();
        let stride = n * d;
        let mut coords = x.coords.clone();
        let src = &x.coords[i * stride..(i + 1) * stride];
        for k in 0..n {
            let dst = &mut coords[k * stride..(k + 1) * stride];
            if k == i {
                for c in dst.iter_mut() {
                    *c = -*c;
                }
            } else {
                let coef = &self.coefficients[i * n + k];
                if *coef != Coefficient::Zero {
                    for (dc, sc) in dst.chunks_exact_mut(d).zip(src.chunks_exact(d)) {
                        coef.mul_add(dc, sc)?;
                    }
                }
            }
        }
        let length = if x.descents >> i & 1 == 1 {
            x.length - 1
        } else {
            x.length + 1
        };
        let mut descents = 0u64;
        for k in 0..n {
            if self.column_sign(&coords[k * stride..(k + 1) * stride])? == Sign::Negative {
                descents |= 1 << k;
            }
        }
        Ok(Element {
            coords,
            length,
            descents,
        })
    }

    /// Sign of a root given by its simple-root coordinates; mixed signs mean
    /// the backend lost the root sign dichotomy.
    fn column_sign(&self, col: &[i64]) -> Result<Sign> {
        let d = self.ring.degree();
        let mut sign = Sign::Zero;
        for chunk in col.chunks_exact(d) {
            let s = self.ring.sign(chunk)?;
            if s == Sign::Zero {
                continue;
            }
            if sign == Sign::Zero {
                sign = s;
            } else if sign != s {
                return Err(Error::Precision {
                    value: self.ring.evaluate(chunk),
                });
            }
        }
        if sign == Sign::Zero {
            return Err(Error::Integrity("image of a simple root vanished".into()));
        }
        Ok(sign)
    }

    /// `x · word`, word letters 1-based; the word need not be reduced.
    pub fn multiply_word(&self, x: &Element, word: &[usize]) -> Result<Element> {
        for &i in word {
            self.check_generator(i)?;
        }
        let mut cur = x.clone();
        for &i in word {
            cur = self.mul_gen0(&cur, i - 1)?;
        }
        Ok(cur)
    }

    pub fn product_of_word(&self, word: &[usize]) -> Result<Element> {
        self.multiply_word(&self.identity, word)
    }

    pub fn length_of(&self, x: &Element) -> usize {
        x.length
    }

    pub fn inverse(&self, x: &Element) -> Result<Element> {
        let mut word = self.canonical_word(x)?;
        word.reverse();
        self.product_of_word(&word)
    }

    /// Descent set on the given side, 1-based and increasing.
    pub fn descent_set(&self, x: &Element, side: Side) -> Result<Vec<usize>> {
        match side {
            Side::Right => Ok(x.right_descents()),
            Side::Left => Ok(self.inverse(x)?.right_descents()),
        }
    }

    /// Reduced word obtained by repeatedly stripping the smallest-index right
    /// descent; the stripped letters are read right to left.
    pub fn canonical_word(&self, x: &Element) -> Result<Vec<usize>> {
        let mut word = Vec::with_capacity(x.length);
        let mut cur = x.clone();
        while cur.descents != 0 {
            let i = cur.descents.trailing_zeros() as usize;
            cur = self.mul_gen0(&cur, i)?;
            word.push(i + 1);
        }
        word.reverse();
        Ok(word)
    }

    pub fn canonical_expression(&self, x: &Element) -> Result<ReducedExpression> {
        ReducedExpression::new(self, self.canonical_word(x)?)
    }

    /// Bruhat order by descent recursion: for a right descent `s` of `w`,
    /// `x ≤ w` iff `xs ≤ ws` when `s` is also a descent of `x`, and iff
    /// `x ≤ ws` otherwise.
    pub fn bruhat_leq(&self, x: &Element, w: &Element) -> Result<bool> {
        let mut x = x.clone();
        let mut w = w.clone();
        loop {
            if x.length > w.length {
                return Ok(false);
            }
            if x.length == 0 {
                return Ok(true);
            }
            if x.length == w.length {
                return Ok(x == w);
            }
            let s = w.descents.trailing_zeros() as usize;
            if x.descents >> s & 1 == 1 {
                x = self.mul_gen0(&x, s)?;
            }
            w = self.mul_gen0(&w, s)?;
        }
    }

    /// Elements covered by `w`: single-letter deletions of a reduced word of
    /// `w` that drop the length by one, deduplicated and sorted.
    pub fn coatoms(&self, w: &Element) -> Result<Vec<Element>> {
        let word = self.canonical_word(w)?;
        let mut prefix = self.identity.clone();
        let mut out = BTreeSet::new();
        for (j, &letter) in word.iter().enumerate() {
            let c = self.multiply_word(&prefix, &word[j + 1..])?;
            if c.length + 1 == w.length {
                out.insert(c);
            }
            prefix = self.mul_gen0(&prefix, letter - 1)?;
        }
        Ok(out.into_iter().collect())
    }

    /// All reduced words of `w`, in lexicographic order, truncated to `limit`.
    pub fn reduced_words(&self, w: &Element, limit: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut suffix = Vec::with_capacity(w.length);
        self.reduced_words_rec(w, &mut suffix, limit, &mut out)?;
        out.sort();
        Ok(out)
    }

    fn reduced_words_rec(
        &self,
        w: &Element,
        suffix: &mut Vec<usize>,
        limit: usize,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        if out.len() >= limit {
            return Ok(());
        }
        if w.length == 0 {
            out.push(suffix.iter().rev().copied().collect());
            return Ok(());
        }
        for i in w.right_descents() {
            let next = self.mul_gen0(w, i - 1)?;
            suffix.push(i);
            self.reduced_words_rec(&next, suffix, limit, out)?;
            suffix.pop();
        }
        Ok(())
    }

    /// Every element of length at most `max_len`, sorted by length. Stops
    /// early when the group is exhausted.
    pub fn elements_up_to(&self, max_len: usize) -> Result<Vec<Element>> {
        let mut all = vec![self.identity.clone()];
        let mut layer = vec![self.identity.clone()];
        for _ in 0..max_len {
            let mut next = BTreeSet::new();
            for x in &layer {
                for i in 0..self.rank() {
                    if x.descents >> i & 1 == 0 {
                        next.insert(self.mul_gen0(x, i)?);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layer = next.into_iter().collect();
            all.extend(layer.iter().cloned());
        }
        Ok(all)
    }
}

/// A reduced word for a fixed element with its cached prefix products
/// `w[0], …, w[p]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedExpression {
    letters: Vec<usize>,
    prefixes: Vec<Element>,
}

impl ReducedExpression {
    /// Validates that `letters` (1-based) is a reduced word.
    pub fn new(sys: &CoxeterSystem, letters: Vec<usize>) -> Result<Self> {
        for &i in &letters {
            sys.check_generator(i)?;
        }
        let mut prefixes = Vec::with_capacity(letters.len() + 1);
        prefixes.push(sys.identity());
        for (j, &i) in letters.iter().enumerate() {
            let last = &prefixes[j];
            if last.has_right_descent(i) {
                return Err(Error::NotReduced { position: j + 1 });
            }
            let next = sys.mul_gen0(last, i - 1)?;
            prefixes.push(next);
        }
        Ok(Self { letters, prefixes })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Letter at 1-based position `j`.
    pub fn letter(&self, j: usize) -> usize {
        self.letters[j - 1]
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `w[0..j]`, `j` in `0..=p`.
    pub fn prefix(&self, j: usize) -> &Element {
        &self.prefixes[j]
    }

    pub fn element(&self) -> &Element {
        &self.prefixes[self.letters.len()]
    }
}
