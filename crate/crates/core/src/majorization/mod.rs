//! Extremal vectors of sum-constrained box sets under the majorization
//! order.
//!
//! All vectors are nonincreasing. `y` majorizes `x` when every proper prefix
//! sum of `y` dominates that of `x` and both have the same total. The
//! maximal element of a set majorizes every member; the minimal element is
//! majorized by every member.

mod maximal;
mod minimal;
mod sets;
mod special;
mod trace;
mod vector;

pub use maximal::{maximal_element, maximal_element_two_block};
pub use minimal::{integerize_minimal, intervals_disjoint, minimal_element, minimal_element_two_block};
pub use sets::{BlockBounds, BoxedSumSet, TwoBlockSet};
pub use special::{extremal_single_interval, extremal_special, one_sided_bounds, Extremum, OneSidedFamily};
pub use trace::{Branch, ExtremalTrace, Pivot};
pub use vector::{majorizes, partial_sums, OrderedVector, TOLERANCE};
