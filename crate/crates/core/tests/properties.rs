use coxmask_core::oracle::leq_oracle;
use coxmask_core::{
    defect_profile, evaluate_mask, greedy_constant_mask, match_interval, presets, CoxeterSystem,
    Element, Error, Mask, ReducedExpression,
};
use proptest::prelude::*;

const GROUPS: [&str; 8] = ["A3", "B3", "D4", "G2", "H3", "I2_7", "tA1", "tA2"];

fn group_and_word(max_len: usize) -> impl Strategy<Value = (CoxeterSystem, Vec<usize>)> {
    prop::sample::select(GROUPS.to_vec()).prop_flat_map(move |name| {
        let sys = presets::system(name).unwrap();
        let rank = sys.rank();
        (Just(sys), prop::collection::vec(1..=rank, 0..=max_len))
    })
}

fn reduce(sys: &CoxeterSystem, word: &[usize]) -> (Element, ReducedExpression) {
    let x = sys.product_of_word(word).unwrap();
    let expr = sys.canonical_expression(&x).unwrap();
    (x, expr)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn every_generator_moves_length_by_one((sys, word) in group_and_word(12)) {
        let x = sys.product_of_word(&word).unwrap();
        for i in 1..=sys.rank() {
            let xs = sys.mul_generator(&x, i).unwrap();
            prop_assert!(xs.length() + 1 == x.length() || xs.length() == x.length() + 1);
            prop_assert_eq!(xs.length() < x.length(), x.has_right_descent(i));
        }
    }

    #[test]
    fn canonical_words_round_trip((sys, word) in group_and_word(12)) {
        let x = sys.product_of_word(&word).unwrap();
        let canon = sys.canonical_word(&x).unwrap();
        prop_assert_eq!(canon.len(), x.length());
        prop_assert_eq!(sys.product_of_word(&canon).unwrap(), x.clone());
        let inv = sys.inverse(&x).unwrap();
        prop_assert!(sys.multiply_word(&x, &sys.canonical_word(&inv).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn coatoms_are_covers((sys, word) in group_and_word(10)) {
        let w = sys.product_of_word(&word).unwrap();
        let coatoms = sys.coatoms(&w).unwrap();
        prop_assert_eq!(coatoms.is_empty(), w.is_identity());
        for c in &coatoms {
            prop_assert_eq!(c.length() + 1, w.length());
            prop_assert!(sys.bruhat_leq(c, &w).unwrap());
        }
    }

    #[test]
    fn greedy_succeeds_exactly_below(
        (sys, word) in group_and_word(9),
        other in prop::collection::vec(1..=3usize, 0..=9),
    ) {
        let (w, expr) = reduce(&sys, &word);
        let other: Vec<usize> = other.iter().map(|&i| 1 + (i - 1) % sys.rank()).collect();
        let x = sys.product_of_word(&other).unwrap();
        let below = sys.bruhat_leq(&x, &w).unwrap();
        prop_assert_eq!(leq_oracle(&sys, &expr, &x).unwrap(), below);
        match greedy_constant_mask(&sys, &expr, &x) {
            Ok((mask, trace)) => {
                prop_assert!(below);
                prop_assert_eq!(mask.count_ones(), x.length());
                prop_assert!(defect_profile(&sys, &expr, &mask).unwrap().is_empty());
                let eval = evaluate_mask(&sys, &expr, &mask).unwrap();
                prop_assert_eq!(eval.element(), &x);
                prop_assert!(trace.final_remainder().is_identity());
            }
            Err(Error::NotBelow(_)) => prop_assert!(!below),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn subword_products_match_completely(
        (sys, word) in group_and_word(7),
        bits in prop::collection::vec(any::<bool>(), 7),
    ) {
        let (w, expr) = reduce(&sys, &word);
        let mask = Mask::new(bits[..expr.len()].to_vec());
        let y = evaluate_mask(&sys, &expr, &mask).unwrap().element().clone();
        prop_assert!(sys.bruhat_leq(&y, &w).unwrap());
        let m = match_interval(&sys, &y, &expr).unwrap();
        let size = sys.enumerate_interval(&y, &w).unwrap().len();
        prop_assert_eq!(2 * m.pairs().len() + m.unmatched().len(), size);
        prop_assert_eq!(m.unmatched().is_empty(), y != w);
    }
}
