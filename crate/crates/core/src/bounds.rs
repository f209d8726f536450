//! Second Zagreb index bounds for graphs with pendant vertices.
//!
//! For a degree sequence with `h` pendant vertices, the vector of edge
//! degree sums `d_u + d_v` has a fixed total `sum d_i^2` and splits into
//! `m - h` non-pendant edges with sums in `[d_(n-h) + d_(n-h-1), d_1 + d_2]`
//! followed by `h` pendant edges with sums in `[1 + d_(n-h), 1 + d_1]`.
//! Since `S(G) = (|x|^2 - sum d_i^3) / 2`, the extremal vectors of this
//! two-block set bound `S(G)` from both sides.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ClassViolation, Error, Result};
use crate::graph::DegreeSequence;
use crate::majorization::{
    integerize_minimal, maximal_element_two_block, minimal_element_two_block, BlockBounds, ExtremalTrace,
    OrderedVector, TwoBlockSet,
};

/// A degree sequence of the pendant class together with the block bounds
/// of its edge-sum constraint set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PendantClassSpec {
    pub sequence: DegreeSequence,
    /// Number of pendant vertices, `h`.
    pub pendants: usize,
    /// Number of edges, `m`.
    pub edges: usize,
    /// `sum d_i^2`, the total of the edge-sum vector.
    pub square_sum: u64,
    /// `sum d_i^3`.
    pub cube_sum: u64,
    /// `d_(n-h) + d_(n-h-1)`
    pub head_lower: u32,
    /// `1 + d_(n-h)`
    pub tail_lower: u32,
    /// `d_1 + d_2`
    pub head_upper: u32,
    /// `1 + d_1`
    pub tail_upper: u32,
}

impl PendantClassSpec {
    /// Number of vertices.
    pub fn vertices(&self) -> usize {
        self.sequence.len()
    }

    /// The two-block set of length `m` whose head has length `m - h`.
    pub fn constraint_set(&self) -> Result<TwoBlockSet> {
        let bounds = BlockBounds {
            head_lower: f64::from(self.head_lower),
            tail_lower: f64::from(self.tail_lower),
            head_upper: f64::from(self.head_upper),
            tail_upper: f64::from(self.tail_upper),
        };
        TwoBlockSet::new(self.edges, self.edges - self.pendants, bounds, self.square_sum as f64)
    }
}

/// Checks pendant-class membership and derives the block bounds.
///
/// The equality case `1 + d_1 = d_(n-h) + d_(n-h-1)` is accepted.
pub fn build_constraint_set(seq: &DegreeSequence) -> Result<PendantClassSpec> {
    let n = seq.len();
    if n < 4 {
        return Err(Error::OutOfClass(ClassViolation::TooFewVertices { n }));
    }
    let h = seq.pendant_count();
    if h == 0 {
        return Err(Error::OutOfClass(ClassViolation::NoPendants));
    }
    if n - h < 2 {
        return Err(Error::OutOfClass(ClassViolation::TooFewCore { n, pendants: h }));
    }
    let d = |i: usize| seq.degree(i);
    let core_pair_sum = d(n - h) + d(n - h - 1);
    if 1 + d(1) > core_pair_sum {
        return Err(Error::OutOfClass(ClassViolation::DegreeCap {
            max_degree: d(1),
            core_pair_sum,
        }));
    }
    let edges = seq.edge_count();
    if edges <= h {
        return Err(Error::OutOfClass(ClassViolation::NoCoreEdges { edges, pendants: h }));
    }
    let spec = PendantClassSpec {
        sequence: seq.clone(),
        pendants: h,
        edges,
        square_sum: seq.sum_of_squares(),
        cube_sum: seq.sum_of_cubes(),
        head_lower: core_pair_sum,
        tail_lower: 1 + d(n - h),
        head_upper: d(1) + d(2),
        tail_upper: 1 + d(1),
    };
    spec.constraint_set()?;
    Ok(spec)
}

/// Lower and upper bounds on the second Zagreb index for a degree sequence
/// of the pendant class.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub class: PendantClassSpec,
    pub lower: i64,
    pub upper: i64,
    /// Integerized minimal edge-sum vector.
    pub lower_vector: OrderedVector,
    /// Maximal edge-sum vector.
    pub upper_vector: OrderedVector,
    /// Minimal element before integerization.
    pub lower_trace: ExtremalTrace,
    pub upper_trace: ExtremalTrace,
    /// The comparison bound `2m^2 - (n-1)m`.
    pub das_gutman: i64,
}

fn index_from_edge_sums(x: &OrderedVector, cube_sum: u64) -> Result<i64> {
    if !x.is_integral() {
        return Err(Error::Consistency(format!(
            "edge-sum vector {:?} is not integral",
            x.as_slice()
        )));
    }
    let squares: i64 = x.iter().map(|v| (v.round() as i64).pow(2)).sum();
    let twice = squares - cube_sum as i64;
    if twice % 2 != 0 {
        return Err(Error::Consistency(format!(
            "sum of squares {squares} minus cube sum {cube_sum} is odd"
        )));
    }
    Ok(twice / 2)
}

/// Bounds `(|x_min|^2 - sum d^3)/2 <= S(G) <= (|x_max|^2 - sum d^3)/2` over
/// the pendant class of `seq`. The lower bound uses the integerized minimal
/// vector because every edge sum is an integer.
pub fn zagreb_bounds(seq: &DegreeSequence) -> Result<BoundsReport> {
    let class = build_constraint_set(seq)?;
    let set = class.constraint_set()?;
    let upper_trace = maximal_element_two_block(&set)?;
    let lower_trace = minimal_element_two_block(&set)?;
    let lower_vector = integerize_minimal(&set, &lower_trace)?;
    let upper_vector = upper_trace.vector.clone();
    let lower = index_from_edge_sums(&lower_vector, class.cube_sum)?;
    let upper = index_from_edge_sums(&upper_vector, class.cube_sum)?;
    if lower > upper {
        return Err(Error::Consistency(format!("lower bound {lower} exceeds upper bound {upper}")));
    }
    let das_gutman = das_gutman_upper(seq.len() as i64, class.edges as i64);
    Ok(BoundsReport {
        class,
        lower,
        upper,
        lower_vector,
        upper_vector,
        lower_trace,
        upper_trace,
        das_gutman,
    })
}

/// Upper bound `2m^2 - (n-1)m` on the second Zagreb index of a graph with
/// `n` vertices and `m` edges.
pub fn das_gutman_upper(n: i64, m: i64) -> i64 {
    2 * m * m - (n - 1) * m
}

/// Degree-sequence families with closed-form bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `(t, s^t, 1^(t(s-1)))`, `2 <= s < t < 2s`; params `[t, s]`.
    TreeI,
    /// `(s^t, t, 1^(t(s-1)))`, `s > t >= 2`; params `[t, s]`.
    TreeII,
    /// `(t^(t+1), 1^(t(t-1)))`, `t >= 2`; params `[t]`.
    TreeIII,
    /// Trees `(k^r, 1^(rk-2r+2))`, `k >= 2`, `r >= 1`; params `[k, r]`.
    UniformCoreTree,
    /// `s` pendants attached to every vertex of a `k`-regular graph on `r`
    /// vertices, `2 <= k <= r-1`, `kr` even, `s >= 1`; params `[k, r, s]`.
    RegularPlusPendants,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::TreeI,
        Family::TreeII,
        Family::TreeIII,
        Family::UniformCoreTree,
        Family::RegularPlusPendants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::TreeI => "tree_i",
            Family::TreeII => "tree_ii",
            Family::TreeIII => "tree_iii",
            Family::UniformCoreTree => "uniform_core_tree",
            Family::RegularPlusPendants => "regular_plus_pendants",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::TreeIII => 1,
            Family::TreeI | Family::TreeII | Family::UniformCoreTree => 2,
            Family::RegularPlusPendants => 3,
        }
    }

    fn check(self, params: &[u32]) -> Result<()> {
        if params.len() != self.arity() {
            return Err(Error::Precondition(format!(
                "{} takes {} parameters, got {}",
                self.name(),
                self.arity(),
                params.len()
            )));
        }
        let ok = match *params {
            [t, s] if self == Family::TreeI => 2 <= s && s < t && t < 2 * s,
            [t, s] if self == Family::TreeII => s > t && t >= 2,
            [t] => t >= 2,
            [k, r] => k >= 2 && r >= 1,
            [k, r, s] => 2 <= k && k < r && (k * r) % 2 == 0 && s >= 1,
            _ => unreachable!("arity checked above"),
        };
        if !ok {
            let regime = match self {
                Family::TreeI => "2 <= s < t < 2s",
                Family::TreeII => "s > t >= 2",
                Family::TreeIII => "t >= 2",
                Family::UniformCoreTree => "k >= 2, r >= 1",
                Family::RegularPlusPendants => "2 <= k <= r-1, kr even, s >= 1",
            };
            return Err(Error::Precondition(format!(
                "{} parameters {params:?} violate {regime}",
                self.name()
            )));
        }
        Ok(())
    }

    /// The degree sequence described by the family and its parameters.
    pub fn degree_sequence(self, params: &[u32]) -> Result<DegreeSequence> {
        self.check(params)?;
        let rep = |value: u32, count: u32| std::iter::repeat_n(value, count as usize);
        let degrees: Vec<u32> = match (self, params) {
            (Family::TreeI, &[t, s]) => std::iter::once(t).chain(rep(s, t)).chain(rep(1, t * (s - 1))).collect(),
            (Family::TreeII, &[t, s]) => rep(s, t).chain(std::iter::once(t)).chain(rep(1, t * (s - 1))).collect(),
            (Family::TreeIII, &[t]) => rep(t, t + 1).chain(rep(1, t * (t - 1))).collect(),
            (Family::UniformCoreTree, &[k, r]) => rep(k, r).chain(rep(1, r * k - 2 * r + 2)).collect(),
            (Family::RegularPlusPendants, &[k, r, s]) => rep(k + s, r).chain(rep(1, s * r)).collect(),
            _ => unreachable!("arity checked above"),
        };
        DegreeSequence::new(degrees)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown family {s:?}")))
    }
}

/// Closed-form bounds for a [`Family`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormBounds {
    pub family: Family,
    pub params: Vec<u32>,
    pub sequence: DegreeSequence,
    pub lower: i64,
    pub upper: i64,
}

impl ClosedFormBounds {
    /// The exact index when both bounds coincide.
    pub fn exact(&self) -> Option<i64> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

fn halve(x: i64) -> Result<i64> {
    if x % 2 != 0 {
        return Err(Error::Consistency(format!("closed form {x}/2 is not an integer")));
    }
    Ok(x / 2)
}

/// Closed-form lower and upper bounds on the second Zagreb index for the
/// trees and pendant-decorated regular graphs of [`Family`].
pub fn closed_form_family(family: Family, params: &[u32]) -> Result<ClosedFormBounds> {
    let sequence = family.degree_sequence(params)?;
    let p: Vec<i64> = params.iter().map(|&x| i64::from(x)).collect();
    let (lower, upper) = match (family, p.as_slice()) {
        (Family::TreeI, &[t, s]) => {
            if t < 2 * s - 1 {
                (halve(t * (3 * t - t * t - 5 * s + 2 * s * t + 3 * s * s))?, t * s * (s + t - 1))
            } else {
                (halve((2 * s - 1) * (3 * s + 3 * s * s - 4))?, s * (2 * s - 1) * (3 * s - 2))
            }
        }
        (Family::TreeII, &[t, s]) => (t * s * (s + t - 1), t * (t - 2 * s + 2 * s * s)),
        (Family::TreeIII, &[t]) => {
            let exact = 2 * t * t * t - t * t;
            (exact, exact)
        }
        (Family::UniformCoreTree, &[k, r]) => {
            let exact = k * (2 * k * r - 2 * r - k + 2);
            (exact, exact)
        }
        (Family::RegularPlusPendants, &[k, r, s]) => {
            let exact = halve(r * (2 * s + k * s + k * k) * (k + s))?;
            (exact, exact)
        }
        _ => unreachable!("parameters validated by degree_sequence"),
    };
    Ok(ClosedFormBounds {
        family,
        params: params.to_vec(),
        sequence,
        lower,
        upper,
    })
}
