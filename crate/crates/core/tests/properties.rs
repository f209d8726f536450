mod common;

use common::{entrywise_close, TOL};
use proptest::prelude::*;
use zagreb_core::oracle::sample_feasible;
use zagreb_core::{
    degree_sequence_of, extremal_single_interval, integerize_minimal, majorizes, maximal_element,
    maximal_element_two_block, minimal_element, minimal_element_two_block, zagreb_bounds, zagreb_exact, BlockBounds,
    BoxedSumSet, Extremum, SimpleGraph, TwoBlockSet,
};

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

/// Boxed sets with nonincreasing bounds and a total anywhere in range.
fn arb_boxed() -> impl Strategy<Value = BoxedSumSet> {
    (1usize..8)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(0u8..12, n),
                proptest::collection::vec(0u8..6, n),
                0.0f64..=1.0,
                any::<bool>(),
            )
        })
        .prop_map(|(lower, width, t, integral)| {
            let lower = sorted_desc(lower.into_iter().map(f64::from).collect());
            let width = sorted_desc(width.into_iter().map(f64::from).collect());
            let upper: Vec<f64> = lower.iter().zip(&width).map(|(l, w)| l + w).collect();
            let (lo, hi): (f64, f64) = (lower.iter().sum(), upper.iter().sum());
            let mut a = lo + t * (hi - lo);
            if integral {
                a = a.round();
            }
            BoxedSumSet::from_slices(&lower, &upper, a).unwrap()
        })
}

/// Two-block sets with integer bounds and either an integer or a fractional
/// total.
fn arb_two_block() -> impl Strategy<Value = TwoBlockSet> {
    (1usize..10, 0usize..10, 0u8..8, 0u8..8, 0u8..6, 0u8..6, 0.0f64..=1.0, any::<bool>()).prop_filter_map(
        "head length and bounds must be valid",
        |(n, h, m2, gap_m, w2, extra, t, integral)| {
            let h = h.min(n - 1) + 1;
            let m2 = f64::from(m2);
            let m1 = m2 + f64::from(gap_m);
            let big_m2 = m2 + f64::from(w2);
            let big_m1 = m1.max(big_m2) + f64::from(extra);
            let bounds = BlockBounds {
                head_lower: m1,
                tail_lower: m2,
                head_upper: big_m1,
                tail_upper: big_m2,
            };
            let (nf, hf) = (n as f64, h as f64);
            let (lo, hi) = (hf * m1 + (nf - hf) * m2, hf * big_m1 + (nf - hf) * big_m2);
            let mut a = lo + t * (hi - lo);
            if integral {
                a = a.round();
            }
            TwoBlockSet::new(n, h, bounds, a).ok()
        },
    )
}

fn squares(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn boxed_extremes_bracket_samples(set in arb_boxed(), seed in any::<u64>()) {
        let max = maximal_element(&set).unwrap().vector;
        let min = minimal_element(&set).unwrap().vector;
        prop_assert!(set.contains(&max));
        prop_assert!(set.contains(&min));
        for w in sample_feasible(set.clone(), 50, seed).unwrap().vectors {
            prop_assert!(majorizes(&max, &w).unwrap(), "max {:?} vs {:?}", max, w);
            prop_assert!(majorizes(&w, &min).unwrap(), "{:?} vs min {:?}", w, min);
            prop_assert!(squares(&min) <= squares(&w) + TOL && squares(&w) <= squares(&max) + TOL);
        }
    }

    #[test]
    fn two_block_forms_match_general(set in arb_two_block()) {
        let expanded = set.expand();
        let max = maximal_element_two_block(&set).unwrap();
        let min = minimal_element_two_block(&set).unwrap();
        let general_max = maximal_element(&expanded).unwrap();
        let general_min = minimal_element(&expanded).unwrap();
        prop_assert!(entrywise_close(&max.vector, &general_max.vector), "{:?} vs {:?}", max, general_max);
        prop_assert!(entrywise_close(&min.vector, &general_min.vector), "{:?} vs {:?}", min, general_min);
    }

    #[test]
    fn two_block_extremes_bracket_samples(set in arb_two_block(), seed in any::<u64>()) {
        let max = maximal_element_two_block(&set).unwrap().vector;
        let min = minimal_element_two_block(&set).unwrap().vector;
        for w in sample_feasible(set, 50, seed).unwrap().vectors {
            prop_assert!(majorizes(&max, &w).unwrap());
            prop_assert!(majorizes(&w, &min).unwrap());
        }
    }

    #[test]
    fn nesting_in_enclosing_interval(set in arb_boxed()) {
        let (lo, hi) = set.enclosing_interval();
        let n = set.len();
        let outer_max = extremal_single_interval(n, set.total(), lo, hi, Extremum::Max).unwrap();
        let outer_min = extremal_single_interval(n, set.total(), lo, hi, Extremum::Min).unwrap();
        let max = maximal_element(&set).unwrap();
        let min = minimal_element(&set).unwrap();
        prop_assert!(majorizes(&outer_max.vector, &max.vector).unwrap());
        prop_assert!(majorizes(&min.vector, &outer_min.vector).unwrap());
    }

    #[test]
    fn single_interval_matches_general(n in 1usize..9, lo in 0u8..5, width in 0u8..6, t in 0.0f64..=1.0) {
        let (lo, hi) = (f64::from(lo), f64::from(lo + width));
        let a = n as f64 * (lo + t * (hi - lo));
        let set = BoxedSumSet::from_slices(&vec![lo; n], &vec![hi; n], a).unwrap();
        let max = extremal_single_interval(n, a, lo, hi, Extremum::Max).unwrap();
        let min = extremal_single_interval(n, a, lo, hi, Extremum::Min).unwrap();
        prop_assert!(entrywise_close(&max.vector, &maximal_element(&set).unwrap().vector));
        prop_assert!(entrywise_close(&min.vector, &minimal_element(&set).unwrap().vector));
    }

    #[test]
    fn integerization_properties(set in arb_two_block().prop_filter("integral", |s| s.is_integral())) {
        let min = minimal_element_two_block(&set).unwrap();
        let int = integerize_minimal(&set, &min).unwrap();
        prop_assert!(int.is_integral());
        prop_assert!((int.sum() - set.total()).abs() <= TOL);
        prop_assert!(set.contains(&int));
        prop_assert!(majorizes(&int, &min.vector).unwrap());
    }
}

/// Connected graphs on up to nine vertices built from a random spanning tree
/// plus random extra edges.
fn arb_connected_graph() -> impl Strategy<Value = SimpleGraph> {
    (4usize..10)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
                proptest::collection::vec((0..n, 0..n), 0..n),
            )
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (parents[v - 1].index(v), v)).collect();
            for (u, v) in extra {
                let e = (u.min(v), u.max(v));
                if u != v && !edges.contains(&e) {
                    edges.push(e);
                }
            }
            SimpleGraph::new(n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bounds_sandwich_random_graphs(g in arb_connected_graph()) {
        let seq = degree_sequence_of(&g);
        // Only graphs in the pendant class have bounds.
        if let Ok(b) = zagreb_bounds(&seq) {
            let s = zagreb_exact(&g).unwrap() as i64;
            prop_assert!(b.lower <= s && s <= b.upper, "{} not in [{}, {}] for {}", s, b.lower, b.upper, seq);
        }
    }
}
