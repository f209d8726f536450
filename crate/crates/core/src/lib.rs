//! Maximal and minimal vectors under the majorization order for box- and
//! sum-constrained sets, and their use as sharp bounds for the second
//! Zagreb index of graphs with pendant vertices.
//!
//! The crate is organised in four layers:
//!
//! * [`majorization`]: constraint sets and their extremal elements;
//! * [`graph`]: degree sequences, simple graphs, the exact index and a
//!   small-instance realization enumerator;
//! * [`bounds`]: the pendant-class constraint set and the resulting bounds;
//! * [`oracle`]: brute-force witnesses used to validate the closed forms.

pub mod bounds;
pub mod error;
pub mod graph;
pub mod majorization;
pub mod oracle;

pub use bounds::{
    build_constraint_set, closed_form_family, das_gutman_upper, zagreb_bounds, BoundsReport, ClosedFormBounds,
    Family, PendantClassSpec,
};
pub use error::{ClassViolation, Error, Result};
pub use graph::{
    degree_sequence_of, enumerate_realizations, is_graphical, zagreb_exact, DegreeSequence, SimpleGraph,
    DEFAULT_VERTEX_CAP,
};
pub use majorization::{
    extremal_single_interval, extremal_special, integerize_minimal, majorizes, maximal_element,
    maximal_element_two_block, minimal_element, minimal_element_two_block, partial_sums, BlockBounds, BoxedSumSet,
    Branch, Extremum, ExtremalTrace, OneSidedFamily, OrderedVector, Pivot, TwoBlockSet, TOLERANCE,
};
