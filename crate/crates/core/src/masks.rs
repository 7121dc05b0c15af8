//! Binary masks on a fixed reduced expression.
//!
//! Position `j` (1-based) is a defect of a mask when the letter `w_j` is a
//! right descent of the prefix product `w^{σ[j-1]}`. Position 1 never is: the
//! empty prefix is the identity, from which every generator ascends.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{CoxeterSystem, Element, ReducedExpression};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mask {
    bits: Vec<bool>,
}

impl Mask {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// Mask from a 0/1 slice; any nonzero value counts as 1.
    pub fn from_digits(digits: &[u8]) -> Self {
        Self::new(digits.iter().map(|&d| d != 0).collect())
    }

    pub fn zeros(p: usize) -> Self {
        Self::new(vec![false; p])
    }

    pub fn ones(p: usize) -> Self {
        Self::new(vec![true; p])
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Value at 1-based position `j`.
    pub fn get(&self, j: usize) -> bool {
        self.bits[j - 1]
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Letters of `expr` kept by the mask, i.e. the subexpression `w^σ`.
    pub fn subword(&self, letters: &[usize]) -> Vec<usize> {
        letters
            .iter()
            .zip(&self.bits)
            .filter(|(_, &b)| b)
            .map(|(&l, _)| l)
            .collect()
    }
}

/// Prefix products `w^{σ[0]}, …, w^{σ[p]}` of a mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskEvaluation {
    prefixes: Vec<Element>,
}

impl MaskEvaluation {
    pub fn element(&self) -> &Element {
        self.prefixes.last().expect("prefixes are never empty")
    }

    /// `w^{σ[j]}` for `j` in `0..=p`.
    pub fn prefix(&self, j: usize) -> &Element {
        &self.prefixes[j]
    }

    pub fn prefixes(&self) -> &[Element] {
        &self.prefixes
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DefectKind {
    Zero,
    One,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DefectProfile {
    defects: Vec<(usize, DefectKind)>,
}

impl DefectProfile {
    /// Defect positions (1-based, increasing).
    pub fn positions(&self) -> Vec<usize> {
        self.defects.iter().map(|&(j, _)| j).collect()
    }

    pub fn kind(&self, j: usize) -> Option<DefectKind> {
        self.defects.iter().find(|&&(p, _)| p == j).map(|&(_, k)| k)
    }

    pub fn defects(&self) -> &[(usize, DefectKind)] {
        &self.defects
    }

    pub fn is_empty(&self) -> bool {
        self.defects.is_empty()
    }
}

/// Remainders `r_1(x), …, r_{p+1}(x)` of the greedy constant-mask algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    remainders: Vec<Element>,
}

impl GreedyTrace {
    /// `r_i(x)` for `i` in `1..=p+1`; `r_{p+1}(x) = x`.
    pub fn remainder(&self, i: usize) -> &Element {
        &self.remainders[i - 1]
    }

    /// `r_1(x)`, the identity exactly when `x` lies below the expression.
    pub fn final_remainder(&self) -> &Element {
        &self.remainders[0]
    }

    pub fn len(&self) -> usize {
        self.remainders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.remainders.is_empty()
    }
}

fn check_len(expr: &ReducedExpression, mask: &Mask) -> Result<()> {
    if expr.len() != mask.len() {
        return Err(Error::MaskLength {
            expected: expr.len(),
            got: mask.len(),
        });
    }
    Ok(())
}

pub(crate) fn prefixes_of(
    sys: &CoxeterSystem,
    letters: &[usize],
    keep: impl Iterator<Item = bool>,
) -> Result<Vec<Element>> {
    let mut prefixes = Vec::with_capacity(letters.len() + 1);
    let mut cur = sys.identity();
    prefixes.push(cur.clone());
    for (&letter, k) in letters.iter().zip(keep) {
        if k {
            cur = sys.mul_gen0(&cur, letter - 1)?;
        }
        prefixes.push(cur.clone());
    }
    Ok(prefixes)
}

pub fn evaluate_mask(
    sys: &CoxeterSystem,
    expr: &ReducedExpression,
    mask: &Mask,
) -> Result<MaskEvaluation> {
    check_len(expr, mask)?;
    Ok(MaskEvaluation {
        prefixes: prefixes_of(sys, expr.letters(), mask.bits.iter().copied())?,
    })
}

/// Defects of `mask`, read off an existing evaluation.
pub(crate) fn defects_from(letters: &[usize], mask: &Mask, eval: &MaskEvaluation) -> DefectProfile {
    let defects = letters
        .iter()
        .enumerate()
        .filter(|&(j, &letter)| eval.prefix(j).has_right_descent(letter))
        .map(|(j, _)| {
            let kind = if mask.bits[j] {
                DefectKind::One
            } else {
                DefectKind::Zero
            };
            (j + 1, kind)
        })
        .collect();
    DefectProfile { defects }
}

pub fn defect_profile(
    sys: &CoxeterSystem,
    expr: &ReducedExpression,
    mask: &Mask,
) -> Result<DefectProfile> {
    let eval = evaluate_mask(sys, expr, mask)?;
    Ok(defects_from(expr.letters(), mask, &eval))
}

/// Greedy right-to-left pass on an arbitrary word. Returns the forced mask and
/// the remainders; the mask is a constant mask for `x` iff `r_1` is trivial.
pub(crate) fn greedy_on_letters(
    sys: &CoxeterSystem,
    letters: &[usize],
    x: &Element,
) -> Result<(Mask, GreedyTrace)> {
    let p = letters.len();
    let mut bits = vec![false; p];
    let mut remainders = Vec::with_capacity(p + 1);
    let mut r = x.clone();
    remainders.push(r.clone());
    for i in (0..p).rev() {
        if r.has_right_descent(letters[i]) {
            bits[i] = true;
            r = sys.mul_gen0(&r, letters[i] - 1)?;
        }
        remainders.push(r.clone());
    }
    remainders.reverse();
    Ok((Mask::new(bits), GreedyTrace { remainders }))
}

/// The unique constant mask on `expr` for `x`, with the greedy trace.
pub fn greedy_constant_mask(
    sys: &CoxeterSystem,
    expr: &ReducedExpression,
    x: &Element,
) -> Result<(Mask, GreedyTrace)> {
    let (mask, trace) = greedy_on_letters(sys, expr.letters(), x)?;
    if !trace.final_remainder().is_identity() {
        return Err(Error::NotBelow(Box::new(trace)));
    }
    Ok((mask, trace))
}

/// Positionwise OR of two constant masks.
pub fn mask_join(
    sys: &CoxeterSystem,
    expr: &ReducedExpression,
    a: &Mask,
    b: &Mask,
) -> Result<Mask> {
    for m in [a, b] {
        if let Some(&(position, _)) = defect_profile(sys, expr, m)?.defects.first() {
            return Err(Error::NotConstant { position });
        }
    }
    Ok(Mask::new(
        a.bits.iter().zip(&b.bits).map(|(&x, &y)| x || y).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn setup() -> (CoxeterSystem, ReducedExpression) {
        let sys = presets::system("A3").unwrap();
        let expr = ReducedExpression::new(&sys, vec![2, 1, 3, 2]).unwrap();
        (sys, expr)
    }

    #[test]
    fn evaluation() {
        let (sys, expr) = setup();
        let e = evaluate_mask(&sys, &expr, &Mask::zeros(4)).unwrap();
        assert!(e.element().is_identity());
        let e = evaluate_mask(&sys, &expr, &Mask::ones(4)).unwrap();
        assert_eq!(e.element(), expr.element());
        let e = evaluate_mask(&sys, &expr, &Mask::from_digits(&[0, 1, 1, 1])).unwrap();
        assert_eq!(e.element(), &sys.product_of_word(&[1, 3, 2]).unwrap());
        assert!(matches!(
            evaluate_mask(&sys, &expr, &Mask::zeros(3)),
            Err(Error::MaskLength {
                expected: 4,
                got: 3
            })
        ));
    }

    #[test]
    fn defects() {
        let (sys, expr) = setup();
        assert!(defect_profile(&sys, &expr, &Mask::zeros(4))
            .unwrap()
            .is_empty());
        let d = defect_profile(&sys, &expr, &Mask::from_digits(&[1, 0, 0, 1])).unwrap();
        assert_eq!(d.positions(), vec![4]);
        assert_eq!(d.kind(4), Some(DefectKind::One));
        let d = defect_profile(&sys, &expr, &Mask::from_digits(&[1, 0, 0, 0])).unwrap();
        assert_eq!(d.defects(), &[(4, DefectKind::Zero)]);
        assert!(
            defect_profile(&sys, &expr, &Mask::from_digits(&[1, 1, 1, 0]))
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn greedy_a4_example() {
        let sys = presets::system("A4").unwrap();
        let expr = ReducedExpression::new(&sys, vec![2, 3, 4, 1, 2, 3]).unwrap();
        let p = |w: &[usize]| sys.product_of_word(w).unwrap();
        let (mask, trace) = greedy_constant_mask(&sys, &expr, &p(&[1, 2, 1])).unwrap();
        assert_eq!(mask, Mask::from_digits(&[1, 0, 0, 1, 1, 0]));
        assert_eq!(trace.remainder(7), &p(&[1, 2, 1]));
        assert_eq!(trace.remainder(6), &p(&[1, 2, 1]));
        assert_eq!(trace.remainder(5), &p(&[2, 1]));
        for i in 2..=4 {
            assert_eq!(trace.remainder(i), &p(&[2]));
        }
        assert!(trace.remainder(1).is_identity());
    }

    #[test]
    fn greedy_examples() {
        let (sys, expr) = setup();
        let (m, _) = greedy_constant_mask(&sys, &expr, expr.element()).unwrap();
        assert_eq!(m, Mask::ones(4));
        let s2 = sys.product_of_word(&[2]).unwrap();
        let (m, _) = greedy_constant_mask(&sys, &expr, &s2).unwrap();
        assert_eq!(m, Mask::from_digits(&[0, 0, 0, 1]));
        let above = sys.product_of_word(&[3, 2, 1]).unwrap();
        match greedy_constant_mask(&sys, &expr, &above) {
            Err(Error::NotBelow(trace)) => {
                assert_eq!(trace.len(), 5);
                assert!(!trace.final_remainder().is_identity());
            }
            other => panic!("expected NotBelow, got {other:?}"),
        }
    }

    #[test]
    fn joins() {
        let (sys, expr) = setup();
        let a = Mask::from_digits(&[0, 0, 0, 1]);
        let b = Mask::from_digits(&[1, 1, 0, 0]);
        assert_eq!(mask_join(&sys, &expr, &a, &a).unwrap(), a);
        assert_eq!(mask_join(&sys, &expr, &Mask::zeros(4), &b).unwrap(), b);
        let j = mask_join(&sys, &expr, &a, &b).unwrap();
        assert_eq!(j, Mask::from_digits(&[1, 1, 0, 1]));
        assert!(defect_profile(&sys, &expr, &j).unwrap().is_empty());
        let e = evaluate_mask(&sys, &expr, &j).unwrap();
        assert_eq!(e.element(), &sys.product_of_word(&[2, 1, 2]).unwrap());
        let bad = Mask::from_digits(&[1, 0, 0, 1]);
        assert_eq!(
            mask_join(&sys, &expr, &bad, &a).unwrap_err(),
            Error::NotConstant { position: 4 }
        );
    }
}
