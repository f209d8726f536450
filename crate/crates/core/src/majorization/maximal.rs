//! Maximal elements under the majorization order.
//!
//! The maximal element of a boxed sum set fills coordinates from the left at
//! their upper bounds, places a single free entry `theta`, and leaves the
//! remaining coordinates at their lower bounds.

use super::sets::{BoxedSumSet, TwoBlockSet};
use super::special::interval_max;
use super::trace::{Branch, ExtremalTrace};
use super::vector::{approx_eq, floor_tol, prefix_from_zero, TOLERANCE};
use crate::error::Result;

/// Maximal element of a general [`BoxedSumSet`].
///
/// `k` is the smallest index with
/// `sum(upper[..k]) + sum(lower[k..]) <= total < sum(upper[..=k]) + sum(lower[k+1..])`.
/// When `total` equals the sum of the upper bounds no such `k` exists and
/// the upper-bound vector itself is returned.
pub fn maximal_element(set: &BoxedSumSet) -> Result<ExtremalTrace> {
    let n = set.len();
    let (lower, upper, total) = (set.lower(), set.upper(), set.total());
    let pu = prefix_from_zero(upper);
    let pl = prefix_from_zero(lower);
    let lower_sum = pl[n];
    // Total with the first k coordinates at their upper bounds.
    let filled = |k: usize| pu[k] + (lower_sum - pl[k]);

    let found = (0..n).find(|&k| filled(k) <= total + TOLERANCE && total < filled(k + 1) - TOLERANCE);
    let Some(k) = found else {
        return ExtremalTrace::max(Branch::MaxUpperBoundary, n - 1, upper[n - 1], upper.to_vec());
    };

    let theta = total - pu[k] - (lower_sum - pl[k + 1]);
    let mut x = Vec::with_capacity(n);
    x.extend_from_slice(&upper[..k]);
    x.push(theta);
    x.extend_from_slice(&lower[k + 1..]);
    ExtremalTrace::max(Branch::MaxGeneral, k, theta, x)
}

/// Maximal element of a [`TwoBlockSet`] using the closed-form block formulas.
pub fn maximal_element_two_block(set: &TwoBlockSet) -> Result<ExtremalTrace> {
    let n = set.len();
    let h = set.head_len();
    let b = set.bounds();
    let a = set.total();

    if h == n {
        let mut t = interval_max(n, a, b.head_lower, b.head_upper)?;
        if t.branch != Branch::Singleton {
            t.branch = Branch::IntervalMax;
        }
        return Ok(t);
    }

    match (set.head_degenerate(), set.tail_degenerate()) {
        (true, true) => {
            let x = set.lower_vector();
            return ExtremalTrace::max(Branch::Singleton, n - 1, x[n - 1], x);
        }
        (true, false) => {
            let tail = interval_max(n - h, a - h as f64 * b.head_lower, b.tail_lower, b.tail_upper)?;
            let mut x = vec![b.head_lower; h];
            x.extend_from_slice(&tail.vector);
            let theta = tail.theta().expect("interval max carries theta");
            return ExtremalTrace::max(Branch::DegenerateHead, h + tail.k, theta, x);
        }
        (false, true) => {
            let head = interval_max(h, a - (n - h) as f64 * b.tail_lower, b.head_lower, b.head_upper)?;
            let mut x = head.vector.to_vec();
            x.resize(n, b.tail_lower);
            let theta = head.theta().expect("interval max carries theta");
            return ExtremalTrace::max(Branch::DegenerateTail, head.k, theta, x);
        }
        (false, false) => {}
    }

    if approx_eq(a, set.max_total()) {
        return ExtremalTrace::max(Branch::MaxUpperBoundary, n - 1, b.tail_upper, set.upper_vector());
    }

    let (nf, hf) = (n as f64, h as f64);
    let head_full = set.head_full_total();
    if a < head_full - TOLERANCE {
        let raw = floor_tol((a - hf * (b.head_lower - b.tail_lower) - nf * b.tail_lower) / (b.head_upper - b.head_lower));
        let k = (raw.max(0.0) as usize).min(h - 1);
        let theta = a - k as f64 * b.head_upper - (h - k - 1) as f64 * b.head_lower - (n - h) as f64 * b.tail_lower;
        let mut x = vec![b.head_upper; k];
        x.push(theta);
        x.resize(h, b.head_lower);
        x.resize(n, b.tail_lower);
        return ExtremalTrace::max(Branch::MaxBelowHeadFull, k, theta, x);
    }

    let raw = floor_tol((a - hf * (b.head_upper - b.tail_upper) - nf * b.tail_lower) / (b.tail_upper - b.tail_lower));
    let k = (raw.max(h as f64) as usize).min(n - 1);
    let theta = a - hf * b.head_upper - (k - h) as f64 * b.tail_upper - (n - k - 1) as f64 * b.tail_lower;
    let mut x = vec![b.head_upper; h];
    x.resize(k, b.tail_upper);
    x.push(theta);
    x.resize(n, b.tail_lower);
    let branch = if approx_eq(a, head_full) {
        Branch::MaxAtHeadFull
    } else {
        Branch::MaxAboveHeadFull
    };
    ExtremalTrace::max(branch, k, theta, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::majorization::sets::BlockBounds;

    fn boxed(a: f64) -> BoxedSumSet {
        BoxedSumSet::from_slices(&[2.0, 1.0, 0.0], &[5.0, 4.0, 3.0], a).unwrap()
    }

    fn two_block(n: usize, h: usize, m1: f64, m2: f64, big_m1: f64, big_m2: f64, a: f64) -> TwoBlockSet {
        let bounds = BlockBounds {
            head_lower: m1,
            tail_lower: m2,
            head_upper: big_m1,
            tail_upper: big_m2,
        };
        TwoBlockSet::new(n, h, bounds, a).unwrap()
    }

    #[test]
    fn general_examples() {
        let t = maximal_element(&boxed(9.0)).unwrap();
        assert_eq!(t.k, 2);
        assert_eq!(t.theta(), Some(0.0));
        assert_eq!(t.vector.as_slice(), &[5.0, 4.0, 0.0]);

        let t = maximal_element(&boxed(12.0)).unwrap();
        assert_eq!(t.vector.as_slice(), &[5.0, 4.0, 3.0]);
        assert_eq!(t.branch, Branch::MaxUpperBoundary);

        let t = maximal_element(&boxed(3.0)).unwrap();
        assert_eq!(t.vector.as_slice(), &[2.0, 1.0, 0.0]);
    }

    #[test]
    fn general_fractional_theta() {
        let t = maximal_element(&boxed(7.5)).unwrap();
        assert_eq!(t.k, 1);
        assert_eq!(t.vector.as_slice(), &[5.0, 2.5, 0.0]);
    }

    #[test]
    fn two_block_at_head_full() {
        // Tree with degrees (3, 2, 2, 2, 1, 1, 1).
        let t = maximal_element_two_block(&two_block(6, 3, 4.0, 3.0, 5.0, 4.0, 24.0)).unwrap();
        assert_eq!(t.branch, Branch::MaxAtHeadFull);
        assert_eq!(t.k, 3);
        assert_eq!(t.theta(), Some(3.0));
        assert_eq!(t.vector.as_slice(), &[5.0, 5.0, 5.0, 3.0, 3.0, 3.0]);
    }

    #[test]
    fn two_block_below_head_full() {
        let t = maximal_element_two_block(&two_block(13, 9, 4.0, 3.0, 6.0, 4.0, 60.0)).unwrap();
        assert_eq!(t.branch, Branch::MaxBelowHeadFull);
        assert_eq!(t.k, 6);
        assert_eq!(t.theta(), Some(4.0));
        assert_eq!(
            t.vector.as_slice(),
            &[6., 6., 6., 6., 6., 6., 4., 4., 4., 3., 3., 3., 3.]
        );
        assert_eq!(t.vector.sum_of_squares(), 300.0);
    }

    #[test]
    fn two_block_above_head_full() {
        // Tree with degrees (3, 3, 2, 1, 1, 1, 1).
        let t = maximal_element_two_block(&two_block(6, 2, 5.0, 3.0, 6.0, 4.0, 26.0)).unwrap();
        assert_eq!(t.branch, Branch::MaxAboveHeadFull);
        assert_eq!(t.k, 4);
        assert_eq!(t.vector.as_slice(), &[6.0, 6.0, 4.0, 4.0, 3.0, 3.0]);
    }

    #[test]
    fn two_block_singleton() {
        let t = maximal_element_two_block(&two_block(5, 2, 3.0, 1.0, 3.0, 1.0, 9.0)).unwrap();
        assert_eq!(t.branch, Branch::Singleton);
        assert_eq!(t.vector.as_slice(), &[3.0, 3.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn two_block_degenerate_head() {
        let t = maximal_element_two_block(&two_block(5, 2, 4.0, 1.0, 4.0, 3.0, 13.0)).unwrap();
        assert_eq!(t.branch, Branch::DegenerateHead);
        assert_eq!(t.vector.as_slice(), &[4.0, 4.0, 3.0, 1.0, 1.0]);
    }

    #[test]
    fn two_block_degenerate_tail() {
        let t = maximal_element_two_block(&two_block(5, 2, 2.0, 1.0, 6.0, 1.0, 10.0)).unwrap();
        assert_eq!(t.branch, Branch::DegenerateTail);
        assert_eq!(t.vector.as_slice(), &[5.0, 2.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn two_block_full_head_is_interval() {
        let t = maximal_element_two_block(&two_block(4, 4, 0.0, 0.0, 3.0, 0.0, 6.0)).unwrap();
        assert_eq!(t.branch, Branch::IntervalMax);
        assert_eq!(t.vector.as_slice(), &[3.0, 3.0, 0.0, 0.0]);
    }

    #[test]
    fn two_block_upper_boundary() {
        let t = maximal_element_two_block(&two_block(4, 2, 1.0, 0.0, 4.0, 3.0, 14.0)).unwrap();
        assert_eq!(t.branch, Branch::MaxUpperBoundary);
        assert_eq!(t.vector.as_slice(), &[4.0, 4.0, 3.0, 3.0]);
    }
}
