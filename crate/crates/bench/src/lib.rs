//! Fixtures shared by the benchmarks.

use zagreb_core::{BlockBounds, DegreeSequence, TwoBlockSet};

/// Two-block set of length `len` with a head of `len * 2 / 3` coordinates in
/// `[4, 6]`, a tail in `[3, 4]` and a total halfway between the extremes.
pub fn scaled_two_block(len: usize) -> TwoBlockSet {
    let head = (len * 2 / 3).max(1);
    let bounds = BlockBounds {
        head_lower: 4.0,
        tail_lower: 3.0,
        head_upper: 6.0,
        tail_upper: 4.0,
    };
    let min = 4.0 * head as f64 + 3.0 * (len - head) as f64;
    let max = 6.0 * head as f64 + 4.0 * (len - head) as f64;
    TwoBlockSet::new(len, head, bounds, ((min + max) / 2.0).round()).expect("valid fixture")
}

/// Caterpillar-like degree sequence with `core` vertices of degree 3 and
/// enough pendants to make it a tree.
pub fn tree_sequence(core: u32) -> DegreeSequence {
    let mut d = vec![3; core as usize];
    d.extend(std::iter::repeat_n(1, (core + 2) as usize));
    DegreeSequence::new(d).expect("graphical fixture")
}
