//! Degree sequences, simple connected graphs and the exact second Zagreb
//! index.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default vertex limit for [`enumerate_realizations`].
pub const DEFAULT_VERTEX_CAP: usize = 8;

/// Erdős–Gallai test. The input is sorted internally, so any order is
/// accepted.
pub fn is_graphical(degrees: &[u32]) -> bool {
    let mut d: Vec<u64> = degrees.iter().map(|&x| u64::from(x)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    if d.iter().sum::<u64>() % 2 != 0 {
        return false;
    }
    let n = d.len();
    let mut prefix = 0u64;
    for k in 1..=n {
        prefix += d[k - 1];
        let kk = k as u64;
        let rest: u64 = d[k..].iter().map(|&x| x.min(kk)).sum();
        if prefix > kk * (kk - 1) + rest {
            return false;
        }
    }
    true
}

/// A graphical degree sequence with positive entries, in nonincreasing
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeSequence {
    degrees: Vec<u32>,
}

impl DegreeSequence {
    /// Validates an already nonincreasing sequence.
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidDegrees("sequence is empty".into()));
        }
        if degrees.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDegrees(format!("{degrees:?} is not in nonincreasing order")));
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidDegrees("every degree must be >= 1".into()));
        }
        let sum: u64 = degrees.iter().map(|&d| u64::from(d)).sum();
        if !sum.is_multiple_of(2) {
            return Err(Error::InvalidDegrees(format!("degree sum {sum} is odd")));
        }
        if degrees[0] as usize > degrees.len() - 1 || !is_graphical(&degrees) {
            return Err(Error::NotGraphical(degrees));
        }
        Ok(DegreeSequence { degrees })
    }

    /// Sorts nonincreasingly and validates. The flag reports whether the
    /// input had to be reordered.
    pub fn from_unsorted(mut degrees: Vec<u32>) -> Result<(Self, bool)> {
        let sorted = degrees.windows(2).all(|w| w[0] >= w[1]);
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok((Self::new(degrees)?, !sorted))
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn edge_count(&self) -> usize {
        self.degrees.iter().map(|&d| d as usize).sum::<usize>() / 2
    }

    /// Number of degree-one vertices.
    pub fn pendant_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    /// `d_i`, 1-based as in the usual notation.
    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i - 1]
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.degrees.iter().map(|&d| u64::from(d).pow(2)).sum()
    }

    pub fn sum_of_cubes(&self) -> u64 {
        self.degrees.iter().map(|&d| u64::from(d).pow(3)).sum()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A simple connected undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    /// Sorted, each pair stored as `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds a graph, rejecting self-loops, duplicate edges, out-of-range
    /// endpoints and disconnected graphs. At least two vertices are required.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let g = Self::new_possibly_disconnected(n, edges)?;
        if !g.is_connected() {
            return Err(Error::InvalidGraph("graph is not connected".into()));
        }
        Ok(g)
    }

    pub(crate) fn new_possibly_disconnected(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGraph(format!("need at least 2 vertices, got {n}")));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) references a vertex outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(SimpleGraph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

/// Degree sequence of a graph, sorted nonincreasingly.
pub fn degree_sequence_of(g: &SimpleGraph) -> DegreeSequence {
    let mut d = g.degrees();
    d.sort_unstable_by(|a, b| b.cmp(a));
    DegreeSequence::new(d).expect("a connected simple graph has a graphical degree sequence")
}

/// Exact second Zagreb index: the sum over edges of the product of the
/// endpoint degrees.
///
/// The value is cross-checked against the equivalent form
/// `(sum over edges of (d_u + d_v)^2 - sum of d^3) / 2`.
pub fn zagreb_exact(g: &SimpleGraph) -> Result<u64> {
    let d: Vec<u64> = g.degrees().into_iter().map(u64::from).collect();
    let products: u64 = g.edges.iter().map(|&(u, v)| d[u] * d[v]).sum();
    let squared_sums: u64 = g.edges.iter().map(|&(u, v)| (d[u] + d[v]).pow(2)).sum();
    let cubes: u64 = d.iter().map(|x| x.pow(3)).sum();
    let via_sums = squared_sums
        .checked_sub(cubes)
        .filter(|diff| diff % 2 == 0)
        .map(|diff| diff / 2);
    if via_sums != Some(products) {
        return Err(Error::Consistency(format!(
            "edge-product sum {products} disagrees with squared-edge-sum form {via_sums:?}"
        )));
    }
    Ok(products)
}

/// All connected labelled realizations of `seq`, where vertex `i` receives
/// degree `seq.degree(i + 1)`.
///
/// Graphs are not reduced up to isomorphism. Two degree-one vertices are
/// never joined when `n > 2`, since such an edge is an isolated component.
pub fn enumerate_realizations(seq: &DegreeSequence, vertex_cap: usize) -> Result<Vec<SimpleGraph>> {
    let n = seq.len();
    if n > vertex_cap {
        return Err(Error::Capacity {
            what: "vertex count",
            value: n,
            cap: vertex_cap,
        });
    }
    let mut search = RealizationSearch {
        n,
        pendant: seq.degrees().iter().map(|&d| d == 1).collect(),
        remaining: seq.degrees().to_vec(),
        edges: Vec::with_capacity(seq.edge_count()),
        out: Vec::new(),
    };
    search.extend(0, 1);
    Ok(search.out)
}

struct RealizationSearch {
    n: usize,
    pendant: Vec<bool>,
    remaining: Vec<u32>,
    edges: Vec<(usize, usize)>,
    out: Vec<SimpleGraph>,
}

impl RealizationSearch {
    /// Completes vertex `v` by choosing neighbours `>= next`, then moves on.
    fn extend(&mut self, v: usize, next: usize) {
        if v == self.n {
            let g = SimpleGraph::new_possibly_disconnected(self.n, self.edges.iter().copied())
                .expect("search only emits simple edges");
            if g.is_connected() {
                self.out.push(g);
            }
            return;
        }
        if self.remaining[v] == 0 {
            self.extend(v + 1, v + 2);
            return;
        }
        let available = (next..self.n).filter(|&j| self.remaining[j] > 0).count();
        if available < self.remaining[v] as usize {
            return;
        }
        for j in next..self.n {
            if self.remaining[j] == 0 || (self.n > 2 && self.pendant[v] && self.pendant[j]) {
                continue;
            }
            self.remaining[v] -= 1;
            self.remaining[j] -= 1;
            self.edges.push((v, j));
            self.extend(v, j + 1);
            self.edges.pop();
            self.remaining[v] += 1;
            self.remaining[j] += 1;
        }
    }
}
