use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used for every real-valued comparison.
///
/// Integer-valued data is represented exactly in `f64`, so comparisons on
/// integer inputs are exact in practice.
pub const TOLERANCE: f64 = 1e-9;

/// A nonempty, nonincreasing vector of nonnegative reals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct OrderedVector(Vec<f64>);

impl OrderedVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidVector("vector must have length >= 1".into()));
        }
        for (i, &x) in entries.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::InvalidVector(format!("entry {i} is not finite")));
            }
            if x < -TOLERANCE {
                return Err(Error::InvalidVector(format!("entry {i} = {x} is negative")));
            }
        }
        if let Some(i) = entries.windows(2).position(|w| w[1] > w[0] + TOLERANCE) {
            return Err(Error::InvalidVector(format!(
                "entries {i} and {} are out of order ({} < {})",
                i + 1,
                entries[i],
                entries[i + 1]
            )));
        }
        Ok(OrderedVector(entries))
    }

    /// Sorts `entries` nonincreasingly before validating.
    pub fn from_unsorted(mut entries: Vec<f64>) -> Result<Self> {
        entries.sort_by(|a, b| b.total_cmp(a));
        Self::new(entries)
    }

    /// `value` repeated `len` times.
    pub fn constant(value: f64, len: usize) -> Result<Self> {
        Self::new(vec![value; len])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    /// True when every entry is within tolerance of an integer.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|&x| is_integral(x))
    }
}

impl Deref for OrderedVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for OrderedVector {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        OrderedVector::new(v)
    }
}

impl From<OrderedVector> for Vec<f64> {
    fn from(v: OrderedVector) -> Vec<f64> {
        v.0
    }
}

/// Prefix sums `P[k] = x_1 + ... + x_k` for `k = 1..=n`.
pub fn partial_sums(x: &[f64]) -> Vec<f64> {
    x.iter()
        .scan(0.0, |acc, &v| {
            *acc += v;
            Some(*acc)
        })
        .collect()
}

/// Prefix sums with a leading zero, so `P[k]` is the sum of the first `k`
/// entries for `k = 0..=n`.
pub(crate) fn prefix_from_zero(x: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(x.len() + 1);
    out.push(0.0);
    out.extend(partial_sums(x));
    out
}

/// Returns whether `y` majorizes `x`: every proper prefix sum of `x` is at
/// most the matching prefix sum of `y`, and the totals agree.
pub fn majorizes(y: &[f64], x: &[f64]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: y.len(),
            right: x.len(),
        });
    }
    let (px, py) = (partial_sums(x), partial_sums(y));
    let n = x.len();
    if n == 0 {
        return Ok(true);
    }
    let prefixes_ok = px[..n - 1]
        .iter()
        .zip(&py[..n - 1])
        .all(|(a, b)| *a <= *b + TOLERANCE);
    Ok(prefixes_ok && approx_eq(px[n - 1], py[n - 1]))
}

pub(crate) fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOLERANCE
}

pub(crate) fn is_integral(x: f64) -> bool {
    (x - x.round()).abs() <= TOLERANCE
}

/// Floor that absorbs rounding noise just below an integer.
pub(crate) fn floor_tol(x: f64) -> f64 {
    (x + TOLERANCE).floor()
}
