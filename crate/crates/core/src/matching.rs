//! The involution φ on relative masks and the matching it induces on a
//! Bruhat interval.
//!
//! φ scans a relative mask right to left and acts at the first position where
//! one of four rules applies:
//!
//! | rule | entry | condition        | action                                  |
//! |------|-------|------------------|-----------------------------------------|
//! | R1   | `X`   | not a defect     | `X → 0`                                 |
//! | R2   | `0`   |                  | `0 → X`                                 |
//! | R3   | `X`   | defect           | `X → 1`, re-mask the prefix for `w^{σ[j-1]} w_j` |
//! | R4   | `1`   | shifted descent  | `1 → X`, re-mask the prefix for `w^{σ[j]}` |
//!
//! The prefix re-masking uses the unique constant mask on the letters of
//! `w^{τ[j-1]}`. Every rule keeps `w^{σ[j]}` fixed and changes the X-mask at
//! position `j` only, so the two X-mask elements form a Bruhat cover.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{CoxeterSystem, Element, ReducedExpression};
use crate::masks::greedy_on_letters;
use crate::relative::{interval_as_relative_masks, Entry, RelativeMask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// R1: non-defect `X` becomes 0.
    XToZero,
    /// R2: 0 becomes `X`.
    ZeroToX,
    /// R3: defect `X` becomes 1.
    DefectXToOne,
    /// R4: shifted-descent 1 becomes a defect `X`.
    OneToDefectX,
}

impl Rule {
    pub fn number(self) -> u8 {
        match self {
            Rule::XToZero => 1,
            Rule::ZeroToX => 2,
            Rule::DefectXToOne => 3,
            Rule::OneToDefectX => 4,
        }
    }

    /// The rule that undoes this one.
    pub fn inverse(self) -> Rule {
        match self {
            Rule::XToZero => Rule::ZeroToX,
            Rule::ZeroToX => Rule::XToZero,
            Rule::DefectXToOne => Rule::OneToDefectX,
            Rule::OneToDefectX => Rule::DefectXToOne,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    /// 1-based position in the reduced expression.
    pub position: usize,
    pub rule: Rule,
}

/// Rightmost applicable move of φ.
pub fn find_move(sys: &CoxeterSystem, rm: &RelativeMask) -> Result<Move> {
    for j in (1..=rm.len()).rev() {
        let defect = rm.is_defect(j);
        let rule = match rm.entry(j) {
            Entry::X if defect => Rule::DefectXToOne,
            Entry::X => Rule::XToZero,
            entry if defect => {
                return Err(Error::Integrity(format!(
                    "entry {entry:?} at position {j} is a defect"
                )))
            }
            Entry::Zero => Rule::ZeroToX,
            Entry::One if rm.is_shifted_descent(sys, j)? => Rule::OneToDefectX,
            Entry::One => continue,
        };
        return Ok(Move { position: j, rule });
    }
    Err(Error::NoMove)
}

/// Applies a specific move. The caller is responsible for `mv` being the
/// move [`find_move`] selects.
pub fn apply_move(sys: &CoxeterSystem, rm: &RelativeMask, mv: Move) -> Result<RelativeMask> {
    let j = mv.position;
    let letters = rm.letters();
    let mut entries = rm.entries().to_vec();
    match mv.rule {
        Rule::XToZero => entries[j - 1] = Entry::Zero,
        Rule::ZeroToX => entries[j - 1] = Entry::X,
        Rule::DefectXToOne | Rule::OneToDefectX => {
            let (target, new_entry) = if mv.rule == Rule::DefectXToOne {
                (
                    sys.mul_gen0(rm.prefix(j - 1), letters[j - 1] - 1)?,
                    Entry::One,
                )
            } else {
                (rm.prefix(j).clone(), Entry::X)
            };
            let kept: Vec<usize> = (0..j - 1).filter(|&k| entries[k] != Entry::X).collect();
            let sub: Vec<usize> = kept.iter().map(|&k| letters[k]).collect();
            let (mask, trace) = greedy_on_letters(sys, &sub, &target)?;
            if !trace.final_remainder().is_identity() {
                return Err(Error::Integrity(format!(
                    "prefix element is not below w^tau[{}] for rule R{}",
                    j - 1,
                    mv.rule.number()
                )));
            }
            for (&k, &bit) in kept.iter().zip(mask.bits()) {
                entries[k] = if bit { Entry::One } else { Entry::Zero };
            }
            entries[j - 1] = new_entry;
        }
    }
    RelativeMask::build(sys, letters.to_vec(), entries)
}

/// `φ(rm)`.
pub fn apply_phi(sys: &CoxeterSystem, rm: &RelativeMask) -> Result<RelativeMask> {
    let mv = find_move(sys, rm)?;
    apply_move(sys, rm, mv)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPair {
    pub upper: Element,
    pub lower: Element,
    /// Move φ makes on the upper element's relative mask (R2 or R4), when
    /// the pair came from φ.
    pub upper_move: Option<Move>,
    /// Move φ makes on the lower element's relative mask (R1 or R3).
    pub lower_move: Option<Move>,
}

/// A matching of the elements of an interval along cover edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<MatchedPair>,
    unmatched: Vec<Element>,
}

impl Matching {
    /// Assembles a matching; pairs and unmatched elements are sorted.
    pub fn new(mut pairs: Vec<MatchedPair>, mut unmatched: Vec<Element>) -> Self {
        pairs.sort_by(|a, b| (&b.upper, &b.lower).cmp(&(&a.upper, &a.lower)));
        unmatched.sort();
        Self { pairs, unmatched }
    }

    pub fn pairs(&self) -> &[MatchedPair] {
        &self.pairs
    }

    pub fn unmatched(&self) -> &[Element] {
        &self.unmatched
    }

    /// Pairs as `(upper, lower)` without move metadata.
    pub fn pair_set(&self) -> BTreeSet<(Element, Element)> {
        self.pairs
            .iter()
            .map(|p| (p.upper.clone(), p.lower.clone()))
            .collect()
    }

    pub fn partner(&self, x: &Element) -> Option<&Element> {
        self.pairs.iter().find_map(|p| {
            if &p.upper == x {
                Some(&p.lower)
            } else if &p.lower == x {
                Some(&p.upper)
            } else {
                None
            }
        })
    }
}

/// The complete matching of `[y, w]` induced by φ on relative masks over the
/// reduced expression `expr` of `w`.
pub fn match_interval(
    sys: &CoxeterSystem,
    y: &Element,
    expr: &ReducedExpression,
) -> Result<Matching> {
    let masks = interval_as_relative_masks(sys, y, expr)?;
    let mut partner: BTreeMap<&Element, (Element, Move)> = BTreeMap::new();
    let mut unmatched = Vec::new();
    for (x, rm) in &masks {
        match find_move(sys, rm) {
            Ok(mv) => {
                let image = apply_move(sys, rm, mv)?;
                partner.insert(x, (image.x_element().clone(), mv));
            }
            Err(Error::NoMove) => unmatched.push(x.clone()),
            Err(e) => return Err(e),
        }
    }
    let mut pairs = Vec::new();
    for (&x, (other, mv)) in &partner {
        let Some((back, back_mv)) = partner.get(other) else {
            return Err(Error::Integrity(
                "phi maps a mask outside the interval or onto a fixed point".into(),
            ));
        };
        if back != x {
            return Err(Error::Integrity("phi is not an involution".into()));
        }
        if x.length() == other.length() + 1 {
            pairs.push(MatchedPair {
                upper: x.clone(),
                lower: other.clone(),
                upper_move: Some(*mv),
                lower_move: Some(*back_mv),
            });
        } else if x.length() + 1 != other.length() {
            return Err(Error::Integrity(
                "phi pairs elements whose lengths differ by more than one".into(),
            ));
        }
    }
    Ok(Matching::new(pairs, unmatched))
}
