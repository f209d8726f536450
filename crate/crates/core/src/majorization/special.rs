//! Closed forms for a single common interval and for the one-sided sets
//! that bound only a prefix from below or only a suffix from above.

use serde::{Deserialize, Serialize};

use super::trace::{Branch, ExtremalTrace};
use super::vector::{approx_eq, floor_tol, TOLERANCE};
use crate::error::{Error, Result};

/// Which extremal element to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Extremum {
    Max,
    Min,
}

/// One-sided constraint families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OneSidedFamily {
    /// `x_i >= alpha` for `i <= h`.
    FloorSet,
    /// `x_i <= alpha` for `i > h`.
    CeilingSet,
}

fn check_interval(n: usize, a: f64, lower: f64, upper: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition("n must be >= 1".into()));
    }
    if !(lower >= 0.0 && lower <= upper + TOLERANCE) {
        return Err(Error::Precondition(format!(
            "interval bounds must satisfy 0 <= {lower} <= {upper}"
        )));
    }
    let (min, max) = (n as f64 * lower, n as f64 * upper);
    if a < min - TOLERANCE || a > max + TOLERANCE {
        return Err(Error::Infeasible { total: a, min, max });
    }
    Ok(())
}

/// Maximal element with every coordinate in `[lower, upper]`.
pub(crate) fn interval_max(n: usize, a: f64, lower: f64, upper: f64) -> Result<ExtremalTrace> {
    check_interval(n, a, lower, upper)?;
    if approx_eq(lower, upper) {
        return ExtremalTrace::max(Branch::Singleton, n - 1, lower, vec![lower; n]);
    }
    if approx_eq(a, n as f64 * upper) {
        return ExtremalTrace::max(Branch::MaxUpperBoundary, n - 1, upper, vec![upper; n]);
    }
    let k = (floor_tol((a - n as f64 * lower) / (upper - lower)).max(0.0) as usize).min(n - 1);
    let theta = a - upper * k as f64 - lower * (n - k - 1) as f64;
    let mut x = vec![upper; k];
    x.push(theta);
    x.resize(n, lower);
    ExtremalTrace::max(Branch::IntervalMax, k, theta, x)
}

pub(crate) fn interval_min(n: usize, a: f64, lower: f64, upper: f64) -> Result<ExtremalTrace> {
    check_interval(n, a, lower, upper)?;
    let mean = a / n as f64;
    ExtremalTrace::min(Branch::IntervalMin, 0, 0, mean, vec![mean; n])
}

/// Extremal elements of the set with all coordinates in `[lower, upper]`.
pub fn extremal_single_interval(
    n: usize,
    a: f64,
    lower: f64,
    upper: f64,
    which: Extremum,
) -> Result<ExtremalTrace> {
    match which {
        Extremum::Max => interval_max(n, a, lower, upper),
        Extremum::Min => interval_min(n, a, lower, upper),
    }
}

/// Extremal elements of the one-sided families.
///
/// The floor set bounds the first `h` coordinates below by `alpha`; the
/// ceiling set bounds the last `n - h` coordinates above by `alpha`. Only
/// the minimal element is available for the ceiling set.
pub fn extremal_special(
    n: usize,
    a: f64,
    h: usize,
    alpha: f64,
    family: OneSidedFamily,
    which: Extremum,
) -> Result<ExtremalTrace> {
    let (nf, hf) = (n as f64, h as f64);
    match family {
        OneSidedFamily::FloorSet => {
            if h == 0 || h > n {
                return Err(Error::Precondition(format!("need 1 <= h <= n, got h = {h}, n = {n}")));
            }
            if !(alpha > 0.0 && alpha <= a / hf + TOLERANCE) {
                return Err(Error::Precondition(format!("need 0 < alpha <= a/h, got alpha = {alpha}")));
            }
        }
        OneSidedFamily::CeilingSet => {
            if h == 0 || h >= n {
                return Err(Error::Precondition(format!("need 1 <= h <= n-1, got h = {h}, n = {n}")));
            }
            if !(alpha > 0.0 && alpha < a) {
                return Err(Error::Precondition(format!("need 0 < alpha < a, got alpha = {alpha}")));
            }
        }
    }

    let mean = a / nf;
    match (family, which) {
        (OneSidedFamily::FloorSet, Extremum::Max) => {
            let mut x = vec![alpha; h];
            x[0] = a - (hf - 1.0) * alpha;
            x.resize(n, 0.0);
            let k = if h == 1 { 1.min(n - 1) } else { 0 };
            ExtremalTrace::max(Branch::FloorSetMax, k, x[k], x)
        }
        (OneSidedFamily::FloorSet, Extremum::Min) => {
            if alpha <= mean + TOLERANCE {
                ExtremalTrace::min(Branch::FloorSetMin, 0, 0, mean, vec![mean; n])
            } else {
                let rho = (a - alpha * hf) / (nf - hf);
                let mut x = vec![alpha; h];
                x.resize(n, rho);
                ExtremalTrace::min(Branch::FloorSetMin, h, 0, rho, x)
            }
        }
        (OneSidedFamily::CeilingSet, Extremum::Min) => {
            if alpha >= mean - TOLERANCE {
                ExtremalTrace::min(Branch::CeilingSetMin, 0, 0, mean, vec![mean; n])
            } else {
                let rho = (a - (nf - hf) * alpha) / hf;
                let mut x = vec![rho; h];
                x.resize(n, alpha);
                ExtremalTrace::min(Branch::CeilingSetMin, 0, n - h, rho, x)
            }
        }
        (OneSidedFamily::CeilingSet, Extremum::Max) => Err(Error::Unsupported(
            "the maximal element of the ceiling set has no closed form here".into(),
        )),
    }
}

/// Bounds of the one-sided family written as per-coordinate vectors.
pub fn one_sided_bounds(n: usize, a: f64, h: usize, alpha: f64, family: OneSidedFamily) -> (Vec<f64>, Vec<f64>) {
    match family {
        OneSidedFamily::FloorSet => {
            let mut lower = vec![alpha; h];
            lower.resize(n, 0.0);
            (lower, vec![a; n])
        }
        OneSidedFamily::CeilingSet => {
            let mut upper = vec![a; h];
            upper.resize(n, alpha);
            (vec![0.0; n], upper)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_interval_examples() {
        let t = extremal_single_interval(4, 6.0, 0.0, 3.0, Extremum::Max).unwrap();
        assert_eq!(t.k, 2);
        assert_eq!(t.vector.as_slice(), &[3.0, 3.0, 0.0, 0.0]);

        let t = extremal_single_interval(4, 6.0, 0.0, 3.0, Extremum::Min).unwrap();
        assert_eq!(t.vector.as_slice(), &[1.5; 4]);

        let t = extremal_single_interval(3, 9.0, 3.0, 3.0, Extremum::Max).unwrap();
        assert_eq!(t.vector.as_slice(), &[3.0; 3]);
    }

    #[test]
    fn single_interval_zero_lower_bound() {
        // k = floor(a / M), theta = a - M k
        let t = extremal_single_interval(5, 7.0, 0.0, 3.0, Extremum::Max).unwrap();
        assert_eq!(t.k, 2);
        assert_eq!(t.theta(), Some(1.0));
        assert_eq!(t.vector.as_slice(), &[3.0, 3.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn single_interval_infeasible() {
        assert!(matches!(
            extremal_single_interval(3, 10.0, 0.0, 3.0, Extremum::Max),
            Err(Error::Infeasible { .. })
        ));
        assert!(matches!(
            extremal_single_interval(3, 1.0, 1.0, 3.0, Extremum::Min),
            Err(Error::Infeasible { .. })
        ));
    }

    #[test]
    fn one_sided_examples() {
        let t = extremal_special(4, 10.0, 2, 2.0, OneSidedFamily::FloorSet, Extremum::Max).unwrap();
        assert_eq!(t.vector.as_slice(), &[8.0, 2.0, 0.0, 0.0]);

        let t = extremal_special(4, 10.0, 2, 2.0, OneSidedFamily::FloorSet, Extremum::Min).unwrap();
        assert_eq!(t.vector.as_slice(), &[2.5; 4]);

        let t = extremal_special(4, 10.0, 2, 1.0, OneSidedFamily::CeilingSet, Extremum::Min).unwrap();
        assert_eq!(t.rho(), Some(4.0));
        assert_eq!(t.vector.as_slice(), &[4.0, 4.0, 1.0, 1.0]);
    }

    #[test]
    fn floor_set_min_with_large_alpha() {
        let t = extremal_special(4, 10.0, 2, 4.0, OneSidedFamily::FloorSet, Extremum::Min).unwrap();
        assert_eq!(t.vector.as_slice(), &[4.0, 4.0, 1.0, 1.0]);
    }

    #[test]
    fn one_sided_rejections() {
        assert!(matches!(
            extremal_special(4, 10.0, 2, 1.0, OneSidedFamily::CeilingSet, Extremum::Max),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            extremal_special(4, 10.0, 2, 6.0, OneSidedFamily::FloorSet, Extremum::Max),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            extremal_special(4, 10.0, 4, 1.0, OneSidedFamily::CeilingSet, Extremum::Min),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            extremal_special(4, 10.0, 0, 1.0, OneSidedFamily::FloorSet, Extremum::Min),
            Err(Error::Precondition(_))
        ));
    }
}
