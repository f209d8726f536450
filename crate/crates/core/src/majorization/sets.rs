use serde::{Deserialize, Serialize};

use super::vector::{approx_eq, is_integral, OrderedVector, TOLERANCE};
use crate::error::{Error, Result};

/// Nonincreasing vectors `x` with `lower[i] <= x[i] <= upper[i]` and a fixed
/// total.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxedSumSet {
    lower: OrderedVector,
    upper: OrderedVector,
    total: f64,
}

impl BoxedSumSet {
    pub fn new(lower: OrderedVector, upper: OrderedVector, total: f64) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                left: lower.len(),
                right: upper.len(),
            });
        }
        if let Some(i) = (0..lower.len()).find(|&i| lower[i] > upper[i] + TOLERANCE) {
            return Err(Error::InvalidSet(format!(
                "lower bound {} exceeds upper bound {} at position {i}",
                lower[i], upper[i]
            )));
        }
        if !total.is_finite() {
            return Err(Error::InvalidSet("total is not finite".into()));
        }
        let (min, max) = (lower.sum(), upper.sum());
        if total < min - TOLERANCE || total > max + TOLERANCE {
            return Err(Error::Infeasible { total, min, max });
        }
        Ok(BoxedSumSet {
            lower,
            upper,
            total,
        })
    }

    /// Convenience constructor from raw slices.
    pub fn from_slices(lower: &[f64], upper: &[f64], total: f64) -> Result<Self> {
        Self::new(
            OrderedVector::new(lower.to_vec())?,
            OrderedVector::new(upper.to_vec())?,
            total,
        )
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn lower(&self) -> &OrderedVector {
        &self.lower
    }

    pub fn upper(&self) -> &OrderedVector {
        &self.upper
    }

    pub fn total(&self) -> f64 {
        self.total
    }

    /// Membership predicate: length, ordering, coordinate bounds and total,
    /// each within [`TOLERANCE`].
    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.len()
            && x.windows(2).all(|w| w[1] <= w[0] + TOLERANCE)
            && x
                .iter()
                .zip(self.lower.iter().zip(self.upper.iter()))
                .all(|(&v, (&lo, &hi))| v >= lo - TOLERANCE && v <= hi + TOLERANCE)
            && approx_eq(x.iter().sum(), self.total)
    }

    pub fn is_integral(&self) -> bool {
        self.lower.is_integral() && self.upper.is_integral() && is_integral(self.total)
    }

    /// The enclosing single-interval set with bounds `[lower_n, upper_1]`.
    pub fn enclosing_interval(&self) -> (f64, f64) {
        (self.lower[self.len() - 1], self.upper[0])
    }
}

/// Vectors whose first `head_len` coordinates lie in one interval and whose
/// remaining coordinates lie in another, nonincreasing, with a fixed total.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoBlockSet {
    len: usize,
    head_len: usize,
    head_lower: f64,
    tail_lower: f64,
    head_upper: f64,
    tail_upper: f64,
    total: f64,
}

/// Block bounds of a [`TwoBlockSet`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockBounds {
    pub head_lower: f64,
    pub tail_lower: f64,
    pub head_upper: f64,
    pub tail_upper: f64,
}

impl TwoBlockSet {
    pub fn new(len: usize, head_len: usize, bounds: BlockBounds, total: f64) -> Result<Self> {
        let BlockBounds {
            head_lower,
            tail_lower,
            head_upper,
            tail_upper,
        } = bounds;
        if len == 0 {
            return Err(Error::InvalidSet("vector length must be >= 1".into()));
        }
        if head_len == 0 || head_len > len {
            return Err(Error::InvalidSet(format!(
                "head length {head_len} must lie in [1, {len}]"
            )));
        }
        let all = [head_lower, tail_lower, head_upper, tail_upper, total];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidSet("bounds and total must be finite".into()));
        }
        if tail_lower < 0.0 || tail_upper < 0.0 {
            return Err(Error::InvalidSet("bounds must be nonnegative".into()));
        }
        if tail_lower > head_lower + TOLERANCE || tail_upper > head_upper + TOLERANCE {
            return Err(Error::InvalidSet(
                "tail bounds must not exceed head bounds".into(),
            ));
        }
        if head_lower > head_upper + TOLERANCE || tail_lower > tail_upper + TOLERANCE {
            return Err(Error::InvalidSet(
                "each block's lower bound must not exceed its upper bound".into(),
            ));
        }
        let set = TwoBlockSet {
            len,
            head_len,
            head_lower,
            tail_lower,
            head_upper,
            tail_upper,
            total,
        };
        let (min, max) = (set.min_total(), set.max_total());
        if total < min - TOLERANCE || total > max + TOLERANCE {
            return Err(Error::Infeasible { total, min, max });
        }
        Ok(set)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn head_len(&self) -> usize {
        self.head_len
    }

    pub fn tail_len(&self) -> usize {
        self.len - self.head_len
    }

    pub fn bounds(&self) -> BlockBounds {
        BlockBounds {
            head_lower: self.head_lower,
            tail_lower: self.tail_lower,
            head_upper: self.head_upper,
            tail_upper: self.tail_upper,
        }
    }

    pub fn total(&self) -> f64 {
        self.total
    }

    pub fn min_total(&self) -> f64 {
        self.head_len as f64 * self.head_lower + self.tail_len() as f64 * self.tail_lower
    }

    pub fn max_total(&self) -> f64 {
        self.head_len as f64 * self.head_upper + self.tail_len() as f64 * self.tail_upper
    }

    /// Total reached with the head at its upper bound and the tail at its
    /// lower bound; the maximal element changes shape here.
    pub fn head_full_total(&self) -> f64 {
        self.head_len as f64 * self.head_upper + self.tail_len() as f64 * self.tail_lower
    }

    /// Total reached with the head at its lower bound and the tail at its
    /// upper bound; the minimal element changes shape here.
    pub fn tail_full_total(&self) -> f64 {
        self.head_len as f64 * self.head_lower + self.tail_len() as f64 * self.tail_upper
    }

    pub fn lower_vector(&self) -> Vec<f64> {
        self.blocks(self.head_lower, self.tail_lower)
    }

    pub fn upper_vector(&self) -> Vec<f64> {
        self.blocks(self.head_upper, self.tail_upper)
    }

    fn blocks(&self, head: f64, tail: f64) -> Vec<f64> {
        let mut v = vec![head; self.head_len];
        v.resize(self.len, tail);
        v
    }

    /// The same set written with per-coordinate bound vectors.
    pub fn expand(&self) -> BoxedSumSet {
        BoxedSumSet {
            lower: OrderedVector::new(self.lower_vector()).expect("validated bounds"),
            upper: OrderedVector::new(self.upper_vector()).expect("validated bounds"),
            total: self.total,
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        self.expand().contains(x)
    }

    pub fn is_integral(&self) -> bool {
        [
            self.head_lower,
            self.tail_lower,
            self.head_upper,
            self.tail_upper,
            self.total,
        ]
        .iter()
        .all(|&v| is_integral(v))
    }

    pub(crate) fn head_degenerate(&self) -> bool {
        approx_eq(self.head_lower, self.head_upper)
    }

    pub(crate) fn tail_degenerate(&self) -> bool {
        self.tail_len() == 0 || approx_eq(self.tail_lower, self.tail_upper)
    }
}

impl From<&TwoBlockSet> for BoxedSumSet {
    fn from(set: &TwoBlockSet) -> Self {
        set.expand()
    }
}
