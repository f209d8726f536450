use std::fmt;

/// Errors produced by the majorization routines, the graph model and the
/// bound pipeline.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid vector: {0}")]
    InvalidVector(String),

    #[error("invalid constraint set: {0}")]
    InvalidSet(String),

    #[error("infeasible set: total {total} lies outside [{min}, {max}]")]
    Infeasible { total: f64, min: f64, max: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("not integerizable: {0}")]
    NotIntegerizable(String),

    #[error("capacity exceeded: {what} is {value}, limit is {cap}")]
    Capacity {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("invalid degree sequence: {0}")]
    InvalidDegrees(String),

    #[error("degree sequence {0:?} is not graphical (Erdős–Gallai)")]
    NotGraphical(Vec<u32>),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("degree sequence is outside the pendant class: {0}")]
    OutOfClass(ClassViolation),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// The membership condition of the pendant class that a degree sequence
/// fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassViolation {
    /// Fewer than four vertices.
    TooFewVertices { n: usize },
    /// No vertex of degree one.
    NoPendants,
    /// Fewer than two vertices of degree at least two.
    TooFewCore { n: usize, pendants: usize },
    /// `1 + d_1 <= d_{n-h} + d_{n-h-1}` fails.
    DegreeCap {
        max_degree: u32,
        core_pair_sum: u32,
    },
    /// Every edge would be pendant, so no realization is connected.
    NoCoreEdges { edges: usize, pendants: usize },
}

impl fmt::Display for ClassViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassViolation::TooFewVertices { n } => {
                write!(f, "requires n >= 4 vertices, got n = {n}")
            }
            ClassViolation::NoPendants => write!(
                f,
                "requires h >= 1 pendant vertices, got h = 0 \
                 (use the single-interval extremal vectors instead)"
            ),
            ClassViolation::TooFewCore { n, pendants } => write!(
                f,
                "requires n - h >= 2 non-pendant vertices, got n - h = {}",
                n - pendants
            ),
            ClassViolation::DegreeCap {
                max_degree,
                core_pair_sum,
            } => write!(
                f,
                "requires 1 + d_1 <= d_(n-h) + d_(n-h-1), got 1 + {max_degree} = {} > {core_pair_sum}",
                max_degree + 1
            ),
            ClassViolation::NoCoreEdges { edges, pendants } => write!(
                f,
                "all {edges} edges would be pendant edges (h = {pendants}), \
                 so no realization is connected"
            ),
        }
    }
}
