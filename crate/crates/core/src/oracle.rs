//! Brute-force witnesses for validating extremal vectors.
//!
//! Nothing in this module calls the closed-form extremal routines except
//! [`verify_extremal`], which computes the candidates and then hands them to
//! the independent checker [`verify_candidates`].

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::majorization::{
    integerize_minimal, majorizes, maximal_element_two_block, minimal_element_two_block, BoxedSumSet,
    OrderedVector, TwoBlockSet, TOLERANCE,
};

/// Default length cap for exhaustive enumeration.
pub const DEFAULT_ENUM_LEN: usize = 6;
/// Largest upper bound accepted by exhaustive enumeration.
pub const MAX_ENUM_UPPER: f64 = 20.0;
/// Default number of samples drawn when enumeration is out of reach.
pub const DEFAULT_SAMPLES: usize = 1000;

/// The set a sample was drawn from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetDescriptor {
    Boxed(BoxedSumSet),
    TwoBlock(TwoBlockSet),
}

impl SetDescriptor {
    fn bounds(&self) -> (Vec<f64>, Vec<f64>, f64) {
        match self {
            SetDescriptor::Boxed(s) => (s.lower().to_vec(), s.upper().to_vec(), s.total()),
            SetDescriptor::TwoBlock(s) => (s.lower_vector(), s.upper_vector(), s.total()),
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        match self {
            SetDescriptor::Boxed(s) => s.contains(x),
            SetDescriptor::TwoBlock(s) => s.contains(x),
        }
    }
}

impl From<BoxedSumSet> for SetDescriptor {
    fn from(set: BoxedSumSet) -> Self {
        SetDescriptor::Boxed(set)
    }
}

impl From<TwoBlockSet> for SetDescriptor {
    fn from(set: TwoBlockSet) -> Self {
        SetDescriptor::TwoBlock(set)
    }
}

/// Seeded members of a constraint set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeasibleSample {
    pub vectors: Vec<OrderedVector>,
    pub seed: u64,
    pub set: SetDescriptor,
}

/// Smallest `x` with `x + sum_j min(upper[j], x) >= rem`, where `upper` is
/// nonincreasing. The left side is increasing and piecewise linear in `x`.
fn min_head_for_remainder(upper: &[f64], rem: f64) -> f64 {
    let r = upper.len();
    // `q` trailing entries lie below `x` and contribute their bound.
    let mut capped = 0.0;
    for q in 0..=r {
        let free = (r - q + 1) as f64;
        let x = (rem - capped) / free;
        let below = if q == 0 { f64::NEG_INFINITY } else { upper[r - q] };
        let above = if q == r { f64::INFINITY } else { upper[r - q - 1] };
        if x <= above + TOLERANCE && x >= below - TOLERANCE {
            return x;
        }
        if q < r {
            capped += upper[r - q - 1];
        }
    }
    // Unreachable for finite inputs; fall back to the exact remainder.
    rem
}

/// Range of coordinate `i` that keeps the remaining coordinates completable
/// given the previous coordinate `prev` and the remaining total `rem`.
fn coordinate_range(lower: &[f64], upper: &[f64], lower_suffix: &[f64], i: usize, prev: f64, rem: f64) -> (f64, f64) {
    let lo = lower[i].max(min_head_for_remainder(&upper[i + 1..], rem));
    let hi = upper[i].min(prev).min(rem - lower_suffix[i + 1]);
    (lo, hi)
}

fn suffix_sums(x: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; x.len() + 1];
    for i in (0..x.len()).rev() {
        out[i] = out[i + 1] + x[i];
    }
    out
}

fn check_feasible(lower: &[f64], upper: &[f64], total: f64) -> Result<()> {
    let (min, max): (f64, f64) = (lower.iter().sum(), upper.iter().sum());
    if total < min - TOLERANCE || total > max + TOLERANCE {
        return Err(Error::Infeasible { total, min, max });
    }
    Ok(())
}

/// Draws `count` members of `set` with a seeded generator.
///
/// Coordinates are drawn left to right, each from the exact range that keeps
/// the vector nonincreasing and the rest of the total attainable, so no
/// rejection or reordering is needed. A fifth of the draws each land on the
/// low and high ends of the range to put weight on the boundary of the set.
pub fn sample_feasible(set: impl Into<SetDescriptor>, count: usize, seed: u64) -> Result<FeasibleSample> {
    let set = set.into();
    if count == 0 {
        return Err(Error::Precondition("sample count must be >= 1".into()));
    }
    let (lower, upper, total) = set.bounds();
    check_feasible(&lower, &upper, total)?;
    let lower_suffix = suffix_sums(&lower);
    let n = lower.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vectors = Vec::with_capacity(count);

    for _ in 0..count {
        let mut x = Vec::with_capacity(n);
        let mut rem = total;
        let mut prev = f64::INFINITY;
        for i in 0..n {
            let value = if i + 1 == n {
                rem
            } else {
                let (lo, hi) = coordinate_range(&lower, &upper, &lower_suffix, i, prev, rem);
                if hi <= lo {
                    lo
                } else {
                    match rng.random_range(0..5u8) {
                        0 => lo,
                        1 => hi,
                        _ => rng.random_range(lo..=hi),
                    }
                }
            };
            x.push(value);
            rem -= value;
            prev = value;
        }
        if !set.contains(&x) {
            return Err(Error::Consistency(format!("sampled vector {x:?} left the set")));
        }
        vectors.push(OrderedVector::new(x)?);
    }
    Ok(FeasibleSample { vectors, seed, set })
}

/// All nonincreasing integer members of `set`, in decreasing lexicographic
/// order.
///
/// Requires integer bounds and total, `len <= cap` and upper bounds of at
/// most [`MAX_ENUM_UPPER`].
pub fn enumerate_integer_feasible(set: &TwoBlockSet, cap: usize) -> Result<Vec<OrderedVector>> {
    if set.len() > cap {
        return Err(Error::Capacity {
            what: "vector length",
            value: set.len(),
            cap,
        });
    }
    let b = set.bounds();
    let top = b.head_upper.max(b.tail_upper);
    if top > MAX_ENUM_UPPER {
        return Err(Error::Capacity {
            what: "largest upper bound",
            value: top as usize,
            cap: MAX_ENUM_UPPER as usize,
        });
    }
    if !set.is_integral() {
        return Err(Error::Precondition(
            "exhaustive enumeration needs integer bounds and total".into(),
        ));
    }
    let lower = set.lower_vector();
    let upper = set.upper_vector();
    let lower_suffix = suffix_sums(&lower);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(set.len());
    enumerate_rec(&lower, &upper, &lower_suffix, set.total(), f64::INFINITY, &mut current, &mut out);
    out.into_iter().map(OrderedVector::new).collect()
}

fn enumerate_rec(
    lower: &[f64],
    upper: &[f64],
    lower_suffix: &[f64],
    rem: f64,
    prev: f64,
    current: &mut Vec<f64>,
    out: &mut Vec<Vec<f64>>,
) {
    let i = current.len();
    if i == lower.len() {
        if rem.abs() <= TOLERANCE {
            out.push(current.clone());
        }
        return;
    }
    let (lo, hi) = coordinate_range(lower, upper, lower_suffix, i, prev, rem);
    let (lo, hi) = ((lo - TOLERANCE).ceil(), (hi + TOLERANCE).floor());
    let mut v = hi;
    while v >= lo {
        current.push(v);
        enumerate_rec(lower, upper, lower_suffix, rem - v, v, current, out);
        current.pop();
        v -= 1.0;
    }
}

/// Where the witnesses of a verification came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    Enumeration,
    Sampling,
}

/// The property a counterexample violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// The maximal candidate is not a member of the set.
    MaxInSet,
    /// The minimal candidate is not a member of the set.
    MinInSet,
    /// The maximal candidate fails to majorize a witness.
    MaxMajorizes,
    /// A witness fails to majorize the minimal candidate.
    MinMajorized,
    /// A witness breaks `|x_min|^2 <= |w|^2 <= |x_max|^2`.
    SquareOrder,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: Check,
    pub witness: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Enumerate exhaustively when the set length is at most this value.
    pub enum_cap: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            enum_cap: DEFAULT_ENUM_LEN,
            samples: DEFAULT_SAMPLES,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub source: WitnessSource,
    pub witnesses: usize,
    pub max_vector: Vec<f64>,
    pub min_vector: Vec<f64>,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let source = match self.source {
            WitnessSource::Enumeration => "enumeration",
            WitnessSource::Sampling => "sampling",
        };
        writeln!(f, "witnesses={} source={source}", self.witnesses)?;
        writeln!(f, "max={:?}", self.max_vector)?;
        writeln!(f, "min={:?}", self.min_vector)?;
        if self.passed() {
            write!(f, "result=pass")
        } else {
            writeln!(f, "result=fail counterexamples={}", self.counterexamples.len())?;
            for (i, c) in self.counterexamples.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "  {:?}: {:?}", c.check, c.witness)?;
            }
            Ok(())
        }
    }
}

fn witnesses_for(set: &TwoBlockSet, options: &VerifyOptions) -> Result<(WitnessSource, Vec<OrderedVector>)> {
    let b = set.bounds();
    let enumerable =
        set.is_integral() && set.len() <= options.enum_cap && b.head_upper.max(b.tail_upper) <= MAX_ENUM_UPPER;
    if enumerable {
        Ok((WitnessSource::Enumeration, enumerate_integer_feasible(set, options.enum_cap)?))
    } else {
        let sample = sample_feasible(*set, options.samples.max(1), options.seed)?;
        Ok((WitnessSource::Sampling, sample.vectors))
    }
}

/// Checks given maximal and minimal candidates against independent witnesses
/// of `set`. Witnesses are all integer members when the set is integral and
/// small enough, seeded samples otherwise.
pub fn verify_candidates(
    set: &TwoBlockSet,
    max: &[f64],
    min: &[f64],
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    let (source, witnesses) = witnesses_for(set, options)?;
    Ok(check_witnesses(set, max, min, source, &witnesses))
}

fn check_witnesses(
    set: &TwoBlockSet,
    max: &[f64],
    min: &[f64],
    source: WitnessSource,
    witnesses: &[OrderedVector],
) -> VerificationReport {
    let mut counterexamples = Vec::new();
    if !set.contains(max) {
        counterexamples.push(Counterexample {
            check: Check::MaxInSet,
            witness: max.to_vec(),
        });
    }
    if !set.contains(min) {
        counterexamples.push(Counterexample {
            check: Check::MinInSet,
            witness: min.to_vec(),
        });
    }
    let squares = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>();
    let (max_sq, min_sq) = (squares(max), squares(min));
    for w in witnesses {
        let mut fail = |check| {
            counterexamples.push(Counterexample {
                check,
                witness: w.to_vec(),
            })
        };
        if !majorizes(max, w).unwrap_or(false) {
            fail(Check::MaxMajorizes);
        }
        if !majorizes(w, min).unwrap_or(false) {
            fail(Check::MinMajorized);
        }
        let sq = squares(w);
        if sq < min_sq - TOLERANCE || sq > max_sq + TOLERANCE {
            fail(Check::SquareOrder);
        }
    }
    VerificationReport {
        source,
        witnesses: witnesses.len(),
        max_vector: max.to_vec(),
        min_vector: min.to_vec(),
        counterexamples,
    }
}

/// Computes the extremal elements of `set` and checks them with
/// [`verify_candidates`].
///
/// Against integer witnesses the integerized minimal vector is checked;
/// against sampled real witnesses the fractional one is.
pub fn verify_extremal(set: &TwoBlockSet, options: &VerifyOptions) -> Result<VerificationReport> {
    let max = maximal_element_two_block(set)?;
    let min = minimal_element_two_block(set)?;
    let (source, witnesses) = witnesses_for(set, options)?;
    let min_vector = match source {
        WitnessSource::Enumeration => integerize_minimal(set, &min)?,
        WitnessSource::Sampling => min.vector,
    };
    Ok(check_witnesses(set, &max.vector, &min_vector, source, &witnesses))
}
