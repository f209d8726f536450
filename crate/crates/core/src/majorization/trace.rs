use std::fmt;

use serde::{Deserialize, Serialize};

use super::vector::OrderedVector;

/// Which case of the extremal-element analysis produced a vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// General maximal element: upper bounds on a prefix, one free entry,
    /// lower bounds on the rest.
    MaxGeneral,
    /// Total equals the sum of the upper bounds.
    MaxUpperBoundary,
    /// Two blocks, total below the head-full threshold.
    MaxBelowHeadFull,
    /// Two blocks, total exactly at the head-full threshold.
    MaxAtHeadFull,
    /// Two blocks, total above the head-full threshold.
    MaxAboveHeadFull,
    /// General minimal element found by the `(k, d)` search.
    MinGeneral,
    /// Minimal element via the pairwise-disjoint interval shortcut.
    MinDisjoint,
    /// The mean vector is feasible.
    MinMean,
    /// Two blocks, head pinned at its lower bound, tail levelled.
    MinHeadAtLower,
    /// Two blocks, tail pinned at its upper bound, head levelled.
    MinTailAtUpper,
    /// Two blocks, total exactly at the tail-full threshold.
    MinAtTailFull,
    /// Every block is degenerate; the set is a single point.
    Singleton,
    /// Head block degenerate, tail solved as a single interval.
    DegenerateHead,
    /// Tail block degenerate, head solved as a single interval.
    DegenerateTail,
    /// Single interval `[m, M]` for all coordinates, maximal element.
    IntervalMax,
    /// Single interval, minimal element (the mean vector).
    IntervalMin,
    /// Lower bound on the first `h` coordinates, maximal element.
    FloorSetMax,
    /// Lower bound on the first `h` coordinates, minimal element.
    FloorSetMin,
    /// Upper bound on the last `n - h` coordinates, minimal element.
    CeilingSetMin,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::MaxGeneral => "max_general",
            Branch::MaxUpperBoundary => "max_upper_boundary",
            Branch::MaxBelowHeadFull => "max_below_head_full",
            Branch::MaxAtHeadFull => "max_at_head_full",
            Branch::MaxAboveHeadFull => "max_above_head_full",
            Branch::MinGeneral => "min_general",
            Branch::MinDisjoint => "min_disjoint",
            Branch::MinMean => "min_mean",
            Branch::MinHeadAtLower => "min_head_at_lower",
            Branch::MinTailAtUpper => "min_tail_at_upper",
            Branch::MinAtTailFull => "min_at_tail_full",
            Branch::Singleton => "singleton",
            Branch::DegenerateHead => "degenerate_head",
            Branch::DegenerateTail => "degenerate_tail",
            Branch::IntervalMax => "interval_max",
            Branch::IntervalMin => "interval_min",
            Branch::FloorSetMax => "floor_set_max",
            Branch::FloorSetMin => "floor_set_min",
            Branch::CeilingSetMin => "ceiling_set_min",
        }
    }
}

/// The shape parameter of an extremal vector.
///
/// Maximal elements carry the single free entry `theta` at position
/// `k + 1`; minimal elements carry the levelled value `rho` on positions
/// `k + 1 ..= n - d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pivot {
    Theta(f64),
    Rho(f64),
}

/// An extremal vector together with the case analysis that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalTrace {
    pub branch: Branch,
    /// Number of leading coordinates pinned to a bound.
    pub k: usize,
    /// Number of trailing coordinates pinned to a bound (minimal case).
    pub d: usize,
    pub pivot: Pivot,
    pub vector: OrderedVector,
}

impl ExtremalTrace {
    pub fn theta(&self) -> Option<f64> {
        match self.pivot {
            Pivot::Theta(t) => Some(t),
            Pivot::Rho(_) => None,
        }
    }

    pub fn rho(&self) -> Option<f64> {
        match self.pivot {
            Pivot::Rho(r) => Some(r),
            Pivot::Theta(_) => None,
        }
    }

    pub(crate) fn max(branch: Branch, k: usize, theta: f64, vector: Vec<f64>) -> crate::Result<Self> {
        Ok(ExtremalTrace {
            branch,
            k,
            d: 0,
            pivot: Pivot::Theta(theta),
            vector: OrderedVector::new(vector)?,
        })
    }

    pub(crate) fn min(
        branch: Branch,
        k: usize,
        d: usize,
        rho: f64,
        vector: Vec<f64>,
    ) -> crate::Result<Self> {
        Ok(ExtremalTrace {
            branch,
            k,
            d,
            pivot: Pivot::Rho(rho),
            vector: OrderedVector::new(vector)?,
        })
    }
}

impl fmt::Display for ExtremalTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "branch={} k={}", self.branch, self.k)?;
        match self.pivot {
            Pivot::Theta(t) => write!(f, " theta={t}"),
            Pivot::Rho(r) => write!(f, " d={} rho={r}", self.d),
        }
    }
}
