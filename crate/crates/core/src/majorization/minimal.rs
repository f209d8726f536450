//! Minimal elements under the majorization order, and their integer
//! counterparts.

use super::sets::{BoxedSumSet, TwoBlockSet};
use super::special::interval_min;
use super::trace::{Branch, ExtremalTrace};
use super::vector::{approx_eq, is_integral, prefix_from_zero, OrderedVector, TOLERANCE};
use crate::error::{Error, Result};

/// Minimal element of a general [`BoxedSumSet`].
///
/// The vector has the shape `[lower_1..lower_k, rho.., upper_(n-d+1)..upper_n]`.
/// Pairs `(k, d)` are tried by increasing `k + d` and then increasing `k`;
/// the first pair whose level `rho` fits the free coordinates' bounds and
/// keeps the vector nonincreasing is accepted. Any admissible pair yields
/// the same vector, so the order only affects which pair is reported.
///
/// When the coordinate intervals are pairwise disjoint the closed form with
/// a single free coordinate is evaluated as well and must agree.
pub fn minimal_element(set: &BoxedSumSet) -> Result<ExtremalTrace> {
    let n = set.len();
    let (lower, upper, a) = (set.lower(), set.upper(), set.total());
    let pl = prefix_from_zero(lower);
    let pu = prefix_from_zero(upper);
    let upper_sum = pu[n];

    let mut found = None;
    'search: for t in 0..n {
        for k in 0..=t {
            let d = t - k;
            let free = n - k - d;
            let rho = (a - pl[k] - (upper_sum - pu[n - d])) / free as f64;
            let fits = lower[k] <= rho + TOLERANCE && rho <= upper[n - d - 1] + TOLERANCE;
            let ordered_left = k == 0 || rho <= lower[k - 1] + TOLERANCE;
            let ordered_right = d == 0 || rho >= upper[n - d] - TOLERANCE;
            if fits && ordered_left && ordered_right {
                found = Some((k, d, rho));
                break 'search;
            }
        }
    }
    let Some((k, d, rho)) = found else {
        return Err(Error::Consistency(format!(
            "no admissible (k, d) pair for the minimal element of a feasible set (total {a})"
        )));
    };

    let mut x = Vec::with_capacity(n);
    x.extend_from_slice(&lower[..k]);
    x.resize(n - d, rho);
    x.extend_from_slice(&upper[n - d..]);

    if intervals_disjoint(set) {
        let shortcut = minimal_element_disjoint(set)?;
        let agrees = shortcut
            .vector
            .iter()
            .zip(&x)
            .all(|(p, q)| approx_eq(*p, *q));
        if !agrees {
            return Err(Error::Consistency(format!(
                "disjoint-interval minimal element {:?} disagrees with the general search {:?}",
                shortcut.vector.as_slice(),
                x
            )));
        }
        return Ok(shortcut);
    }

    ExtremalTrace::min(Branch::MinGeneral, k, d, rho, x)
}

/// True when `upper[i + 1] < lower[i]` for every `i`.
pub fn intervals_disjoint(set: &BoxedSumSet) -> bool {
    let (lower, upper) = (set.lower(), set.upper());
    (0..set.len() - 1).all(|i| upper[i + 1] < lower[i])
}

/// Closed form for pairwise disjoint intervals: lower bounds on a prefix,
/// one free coordinate, upper bounds on the rest.
fn minimal_element_disjoint(set: &BoxedSumSet) -> Result<ExtremalTrace> {
    let n = set.len();
    let (lower, upper, a) = (set.lower(), set.upper(), set.total());
    let pl = prefix_from_zero(lower);
    let pu = prefix_from_zero(upper);
    let upper_sum = pu[n];
    // Total with the first k coordinates at their lower bounds and the rest
    // at their upper bounds; nonincreasing in k.
    let pinned = |k: usize| pl[k] + (upper_sum - pu[k]);

    if approx_eq(a, upper_sum) {
        return ExtremalTrace::min(Branch::Singleton, 0, n - 1, upper[0], upper.to_vec());
    }
    let k = (0..n)
        .find(|&k| pinned(k + 1) <= a + TOLERANCE && a < pinned(k) - TOLERANCE)
        .ok_or_else(|| Error::Consistency(format!("no index brackets total {a}")))?;
    let rho = a - pl[k] - (upper_sum - pu[k + 1]);
    let mut x = lower[..k].to_vec();
    x.push(rho);
    x.extend_from_slice(&upper[k + 1..]);
    ExtremalTrace::min(Branch::MinDisjoint, k, n - k - 1, rho, x)
}

/// Minimal element of a [`TwoBlockSet`] from the two-block closed forms.
pub fn minimal_element_two_block(set: &TwoBlockSet) -> Result<ExtremalTrace> {
    let n = set.len();
    let h = set.head_len();
    let tail = n - h;
    let b = set.bounds();
    let a = set.total();
    let (nf, hf, tf) = (n as f64, h as f64, tail as f64);

    if h == n {
        return interval_min(n, a, b.head_lower, b.head_upper);
    }

    match (set.head_degenerate(), set.tail_degenerate()) {
        (true, true) => {
            let x = set.lower_vector();
            return ExtremalTrace::min(Branch::Singleton, n - 1, 0, x[n - 1], x);
        }
        (true, false) => {
            let rho = (a - hf * b.head_lower) / tf;
            let mut x = vec![b.head_lower; h];
            x.resize(n, rho);
            return ExtremalTrace::min(Branch::DegenerateHead, h, 0, rho, x);
        }
        (false, true) => {
            let rho = (a - tf * b.tail_lower) / hf;
            let mut x = vec![rho; h];
            x.resize(n, b.tail_lower);
            return ExtremalTrace::min(Branch::DegenerateTail, 0, tail, rho, x);
        }
        (false, false) => {}
    }

    let head_at_lower = |branch| {
        let rho = (a - hf * b.head_lower) / tf;
        let mut x = vec![b.head_lower; h];
        x.resize(n, rho);
        ExtremalTrace::min(branch, h, 0, rho, x)
    };
    let tail_at_upper = |branch| {
        let rho = (a - tf * b.tail_upper) / hf;
        let mut x = vec![rho; h];
        x.resize(n, b.tail_upper);
        ExtremalTrace::min(branch, 0, tail, rho, x)
    };

    let mean = a / nf;
    if b.head_lower <= b.tail_upper {
        if mean < b.head_lower - TOLERANCE {
            head_at_lower(Branch::MinHeadAtLower)
        } else if mean > b.tail_upper + TOLERANCE {
            tail_at_upper(Branch::MinTailAtUpper)
        } else {
            ExtremalTrace::min(Branch::MinMean, 0, 0, mean, vec![mean; n])
        }
    } else {
        let tail_full = set.tail_full_total();
        if approx_eq(a, tail_full) {
            let mut x = vec![b.head_lower; h];
            x.resize(n, b.tail_upper);
            ExtremalTrace::min(Branch::MinAtTailFull, h, 0, b.tail_upper, x)
        } else if a < tail_full {
            head_at_lower(Branch::MinHeadAtLower)
        } else {
            tail_at_upper(Branch::MinTailAtUpper)
        }
    }
}

/// Replaces every constant run of non-integer entries of a minimal vector by
/// the balanced integer run with the same sum: `T - floor(T/L) L` entries
/// equal to `floor(T/L) + 1` followed by entries equal to `floor(T/L)`.
///
/// Requires integer block bounds and total. The result is checked to lie in
/// the set and to majorize the input.
pub fn integerize_minimal(set: &TwoBlockSet, minimal: &ExtremalTrace) -> Result<OrderedVector> {
    if !set.is_integral() {
        return Err(Error::NotIntegerizable(
            "block bounds and total must be integers".into(),
        ));
    }
    let x = &minimal.vector;
    if x.len() != set.len() {
        return Err(Error::DimensionMismatch {
            left: set.len(),
            right: x.len(),
        });
    }

    let mut out = Vec::with_capacity(x.len());
    let mut start = 0;
    while start < x.len() {
        let value = x[start];
        let end = start + x[start..].iter().take_while(|v| approx_eq(**v, value)).count();
        let len = end - start;
        if is_integral(value) {
            out.extend(std::iter::repeat_n(value.round(), len));
        } else {
            let run_total = value * len as f64;
            if !is_integral(run_total) {
                return Err(Error::NotIntegerizable(format!(
                    "run of {len} entries equal to {value} sums to non-integer {run_total}"
                )));
            }
            let run_total = run_total.round() as i64;
            let len_i = len as i64;
            let base = run_total.div_euclid(len_i);
            let extra = (run_total - base * len_i) as usize;
            out.extend(std::iter::repeat_n((base + 1) as f64, extra));
            out.extend(std::iter::repeat_n(base as f64, len - extra));
        }
        start = end;
    }

    if !set.contains(&out) {
        return Err(Error::Consistency(format!(
            "integerized vector {out:?} leaves the constraint set"
        )));
    }
    if !super::vector::majorizes(&out, x)? {
        return Err(Error::Consistency(format!(
            "integerized vector {out:?} does not majorize {:?}",
            x.as_slice()
        )));
    }
    OrderedVector::new(out)
}
