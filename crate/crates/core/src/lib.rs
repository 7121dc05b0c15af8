//! Coxeter group arithmetic, Deodhar masks, relative masks and the explicit
//! nonrecursive complete matching of Bruhat-interval Hasse diagrams.
//!
//! The crate is `no_std` and only needs `alloc`. Generator indices are
//! 1-based throughout the public API (`s_1, s_2, …`), as are positions in
//! masks and reduced expressions.
//!
//! ```
//! use coxmask_core::{presets, match_interval, ReducedExpression};
//!
//! let sys = presets::system("A3").unwrap();
//! let y = sys.product_of_word(&[2]).unwrap();
//! let w = ReducedExpression::new(&sys, vec![2, 1, 3, 2]).unwrap();
//! let m = match_interval(&sys, &y, &w).unwrap();
//! assert_eq!(m.pairs().len(), 5);
//! assert!(m.unmatched().is_empty());
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod acyclic;
mod error;
mod group;
mod interval;
pub mod masks;
mod matching;
mod matrix;
pub mod oracle;
pub mod presets;
mod reflection;
pub mod relative;
pub mod scalar;

pub use acyclic::acyclicity_check;
pub use error::{Error, Result};
pub use group::{CoxeterSystem, Element, ReducedExpression, Side, DEFAULT_MAX_LENGTH};
pub use interval::HasseInterval;
pub use masks::{
    defect_profile, evaluate_mask, greedy_constant_mask, mask_join, DefectKind, DefectProfile,
    GreedyTrace, Mask, MaskEvaluation,
};
pub use matching::{apply_phi, find_move, match_interval, MatchedPair, Matching, Move, Rule};
pub use matrix::{CoxeterMatrix, MAX_RANK};
pub use reflection::{reflection_order, rw_match, ReflectionOrder};
pub use relative::{
    build_relative_mask, interval_as_relative_masks, relative_defect_profile, shifted_descent_set,
    xmask_of, Entry, RelativeMask,
};
