#![allow(dead_code)]

use zagreb_core::majorization::one_sided_bounds;
use zagreb_core::{
    extremal_special, maximal_element, maximal_element_two_block, minimal_element, minimal_element_two_block,
    BlockBounds, BoxedSumSet, DegreeSequence, Extremum, OneSidedFamily, TwoBlockSet,
};

pub const TOL: f64 = 1e-9;

/// A constraint set in one of the shapes that has its own closed form.
#[derive(Debug, Clone)]
pub enum Fixture {
    TwoBlock(TwoBlockSet),
    Boxed(BoxedSumSet),
    OneSided {
        n: usize,
        a: f64,
        h: usize,
        alpha: f64,
        family: OneSidedFamily,
    },
}

impl Fixture {
    /// The set written with per-coordinate bounds.
    pub fn expanded(&self) -> BoxedSumSet {
        match self {
            Fixture::TwoBlock(s) => s.expand(),
            Fixture::Boxed(s) => s.clone(),
            Fixture::OneSided {
                n,
                a,
                h,
                alpha,
                family,
            } => {
                let (lower, upper) = one_sided_bounds(*n, *a, *h, *alpha, *family);
                BoxedSumSet::from_slices(&lower, &upper, *a).unwrap()
            }
        }
    }

    /// Maximal element from the most specific closed form available.
    pub fn closed_form_max(&self) -> Vec<f64> {
        match self {
            Fixture::TwoBlock(s) => maximal_element_two_block(s).unwrap().vector.into_vec(),
            Fixture::Boxed(s) => maximal_element(s).unwrap().vector.into_vec(),
            Fixture::OneSided {
                n,
                a,
                h,
                alpha,
                family: OneSidedFamily::FloorSet,
            } => extremal_special(*n, *a, *h, *alpha, OneSidedFamily::FloorSet, Extremum::Max)
                .unwrap()
                .vector
                .into_vec(),
            Fixture::OneSided { .. } => maximal_element(&self.expanded()).unwrap().vector.into_vec(),
        }
    }

    /// Minimal element from the most specific closed form available.
    pub fn closed_form_min(&self) -> Vec<f64> {
        match self {
            Fixture::TwoBlock(s) => minimal_element_two_block(s).unwrap().vector.into_vec(),
            Fixture::Boxed(s) => minimal_element(s).unwrap().vector.into_vec(),
            Fixture::OneSided {
                n,
                a,
                h,
                alpha,
                family,
            } => extremal_special(*n, *a, *h, *alpha, *family, Extremum::Min)
                .unwrap()
                .vector
                .into_vec(),
        }
    }

    /// True when the fixture has a dedicated maximal closed form distinct
    /// from the general routine.
    pub fn has_special_max(&self) -> bool {
        !matches!(
            self,
            Fixture::Boxed(_)
                | Fixture::OneSided {
                    family: OneSidedFamily::CeilingSet,
                    ..
                }
        )
    }
}

pub fn two_block(n: usize, h: usize, m1: f64, m2: f64, big_m1: f64, big_m2: f64, a: f64) -> TwoBlockSet {
    let bounds = BlockBounds {
        head_lower: m1,
        tail_lower: m2,
        head_upper: big_m1,
        tail_upper: big_m2,
    };
    TwoBlockSet::new(n, h, bounds, a).unwrap()
}

/// Twenty sets covering every branch of the closed forms.
pub fn set_fixtures() -> Vec<(&'static str, Fixture)> {
    let tb = |name, n, h, m1, m2, big_m1, big_m2, a| (name, Fixture::TwoBlock(two_block(n, h, m1, m2, big_m1, big_m2, a)));
    let boxed = |name, lower: &[f64], upper: &[f64], a| {
        (name, Fixture::Boxed(BoxedSumSet::from_slices(lower, upper, a).unwrap()))
    };
    let one_sided = |name, n, a, h, alpha, family| {
        (
            name,
            Fixture::OneSided {
                n,
                a,
                h,
                alpha,
                family,
            },
        )
    };
    vec![
        tb("unicyclic n=13", 13, 9, 4.0, 3.0, 6.0, 4.0, 60.0),
        tb("at head-full total", 6, 3, 4.0, 3.0, 5.0, 4.0, 24.0),
        tb("at tail-full total, disjoint blocks", 6, 2, 5.0, 3.0, 6.0, 4.0, 26.0),
        tb("singleton", 5, 2, 3.0, 1.0, 3.0, 1.0, 9.0),
        tb("degenerate head", 5, 2, 4.0, 1.0, 4.0, 3.0, 13.0),
        tb("degenerate tail", 5, 2, 2.0, 1.0, 6.0, 1.0, 10.0),
        tb("head covers everything", 4, 4, 0.0, 0.0, 3.0, 0.0, 6.0),
        tb("mean inside both blocks", 4, 2, 1.0, 0.0, 4.0, 3.0, 8.0),
        tb("fractional bounds", 8, 3, 2.5, 0.5, 7.25, 3.0, 20.0),
        tb("disjoint blocks, high total", 7, 4, 6.0, 1.0, 9.0, 2.0, 33.0),
        tb("disjoint blocks, low total", 7, 4, 6.0, 1.0, 9.0, 2.0, 28.0),
        tb("disjoint blocks, at tail-full total", 7, 4, 6.0, 1.0, 9.0, 2.0, 30.0),
        tb("fractional total", 10, 6, 3.0, 2.0, 5.0, 4.0, 38.5),
        boxed("boxed, fractional pivot", &[2.0, 1.0, 0.0], &[5.0, 4.0, 3.0], 7.5),
        boxed("boxed, disjoint intervals", &[9.0, 6.0, 3.0, 0.0], &[12.0, 8.0, 5.0, 2.0], 22.0),
        boxed("boxed, overlapping", &[4.0, 4.0, 2.0, 1.0, 0.0], &[9.0, 6.0, 6.0, 3.0, 2.0], 15.0),
        boxed("boxed, one interval", &[1.0; 6], &[5.0; 6], 13.0),
        one_sided("floor set, mean feasible", 4, 10.0, 2, 2.0, OneSidedFamily::FloorSet),
        one_sided("floor set, prefix pinned", 5, 10.0, 2, 4.0, OneSidedFamily::FloorSet),
        one_sided("ceiling set, suffix pinned", 6, 12.0, 2, 1.0, OneSidedFamily::CeilingSet),
    ]
}

/// Ten graphical pendant-class degree sequences with at most eight vertices.
pub fn sequence_fixtures() -> Vec<DegreeSequence> {
    [
        &[3, 2, 2, 1][..],
        &[3, 3, 3, 3, 2, 1, 1],
        &[2, 2, 1, 1],
        &[2, 2, 2, 1, 1],
        &[3, 2, 2, 2, 1, 1, 1],
        &[3, 3, 2, 1, 1, 1, 1],
        &[3, 3, 3, 1, 1, 1],
        &[3, 3, 2, 2, 1, 1],
        &[3, 3, 3, 2, 2, 1],
        &[3, 3, 2, 2, 2, 2, 1, 1],
    ]
    .iter()
    .map(|d| DegreeSequence::new(d.to_vec()).unwrap())
    .collect()
}

pub fn entrywise_close(x: &[f64], y: &[f64]) -> bool {
    x.len() == y.len() && x.iter().zip(y).all(|(a, b)| (a - b).abs() <= TOL)
}
