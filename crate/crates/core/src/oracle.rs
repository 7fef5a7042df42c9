//! Brute-force ground truth: classify every bipartition by exact LP.
//!
//! A bipartition is Radon when the two hulls meet in exactly one point. The
//! single-point test does not rely on general position: it minimizes and
//! maximizes each coordinate of the common point over the whole
//! intersection, and calls it a single point only when every range
//! collapses.

use crate::certificate::Partition;
use crate::error::{RadonError, Result};
use crate::geometry::{Point, PointSet};
use crate::lp::{FeasibilitySystem, FeasibleTableau, LpOutcome, Sense};
use crate::rational::{self, Rational};

pub use crate::lp::{lp_feasible, lp_optimize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HullIntersection {
    Empty,
    Single(Point),
    Multi,
}

impl HullIntersection {
    pub fn is_empty(&self) -> bool {
        matches!(self, HullIntersection::Empty)
    }
}

/// How the convex hulls of `p` and `q` meet.
pub fn hulls_intersection_info(p: &[&Point], q: &[&Point]) -> HullIntersection {
    assert!(!p.is_empty() && !q.is_empty(), "hulls of empty lists");
    let d = p[0].dim();
    assert!(p.iter().chain(q).all(|x| x.dim() == d), "hull query with mixed dimensions");

    // Variables: λ over p, then μ over q.
    let nvars = p.len() + q.len();
    let mut sys = FeasibilitySystem::new(nvars);
    for k in 0..d {
        let row = p
            .iter()
            .map(|x| x.coords()[k].clone())
            .chain(q.iter().map(|x| -&x.coords()[k]))
            .collect();
        sys.push(row, rational::zero()).expect("row length matches");
    }
    let weights = |first: bool| {
        (0..nvars).map(|i| if (i < p.len()) == first { rational::one() } else { rational::zero() }).collect()
    };
    sys.push(weights(true), rational::one()).expect("row length matches");
    sys.push(weights(false), rational::one()).expect("row length matches");

    let Some(start) = FeasibleTableau::phase_one(&sys) else {
        return HullIntersection::Empty;
    };
    let mut coords = Vec::with_capacity(d);
    for k in 0..d {
        let objective: Vec<Rational> = p
            .iter()
            .map(|x| x.coords()[k].clone())
            .chain(std::iter::repeat_with(rational::zero).take(q.len()))
            .collect();
        let bound = |sense| match start.optimize(&objective, sense) {
            LpOutcome::Optimal { value, .. } => value,
            // λ lies in a simplex, so the coordinate is bounded.
            other => unreachable!("bounded LP returned {other:?}"),
        };
        let lo = bound(Sense::Minimize);
        if lo != bound(Sense::Maximize) {
            return HullIntersection::Multi;
        }
        coords.push(lo);
    }
    HullIntersection::Single(Point::new(coords).expect("dimension is at least one"))
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub instance: PointSet,
    /// Single-point partitions, in canonical order.
    pub radon_partitions: Vec<(Partition, Point)>,
    /// Bipartitions whose hulls meet at all.
    pub intersecting_partitions: usize,
    /// Every canonical bipartition with its classification, in enumeration
    /// order.
    pub classified: Vec<(Partition, HullIntersection)>,
}

impl OracleReport {
    /// The Radon partition, if there is exactly one.
    pub fn unique(&self) -> Option<&(Partition, Point)> {
        match self.radon_partitions.as_slice() {
            [only] => Some(only),
            _ => None,
        }
    }
}

/// Classifies all `2^{n-1} - 1` canonical bipartitions of `ps`.
pub fn brute_force_radon(ps: &PointSet) -> Result<OracleReport> {
    if ps.len() < 2 || ps.len() > 24 {
        return Err(RadonError::InvalidInput(format!("oracle enumeration needs 2..=24 points, got {}", ps.len())));
    }
    let classified: Vec<(Partition, HullIntersection)> = Partition::enumerate(ps.len())
        .map(|part| {
            let info = hulls_intersection_info(&ps.select(part.side_i()), &ps.select(part.side_j()));
            (part, info)
        })
        .collect();
    let intersecting_partitions = classified.iter().filter(|(_, c)| !c.is_empty()).count();
    let mut radon_partitions: Vec<(Partition, Point)> = classified
        .iter()
        .filter_map(|(part, c)| match c {
            HullIntersection::Single(x) => Some((part.clone(), x.clone())),
            _ => None,
        })
        .collect();
    radon_partitions.sort();
    Ok(OracleReport { instance: ps.clone(), radon_partitions, intersecting_partitions, classified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::hull_membership;
    use crate::rational::frac;

    fn pts(list: &[&[i64]]) -> Vec<Point> {
        list.iter().map(|c| Point::from_ints(c)).collect()
    }

    fn info(a: &[&[i64]], b: &[&[i64]]) -> HullIntersection {
        let (a, b) = (pts(a), pts(b));
        hulls_intersection_info(&a.iter().collect::<Vec<_>>(), &b.iter().collect::<Vec<_>>())
    }

    #[test]
    fn segment_pairs() {
        assert_eq!(info(&[&[0, 0], &[2, 2]], &[&[2, 0], &[0, 2]]), HullIntersection::Single(Point::from_ints(&[1, 1])));
        assert_eq!(info(&[&[0, 0], &[1, 0]], &[&[3, 0], &[4, 0]]), HullIntersection::Empty);
        assert_eq!(info(&[&[0, 0], &[2, 0]], &[&[1, 0], &[3, 0]]), HullIntersection::Multi);
        // Touching at an endpoint is a single point.
        assert_eq!(info(&[&[0, 0], &[1, 0]], &[&[1, 0], &[2, 5]]), HullIntersection::Single(Point::from_ints(&[1, 0])));
    }

    #[test]
    fn symmetric_in_arguments() {
        type Pair<'a> = (&'a [&'a [i64]], &'a [&'a [i64]]);
        let cases: [Pair; 3] = [
            (&[&[0, 0], &[2, 2]], &[&[2, 0], &[0, 2]]),
            (&[&[0, 0], &[2, 0]], &[&[1, 0], &[3, 0]]),
            (&[&[0, 0], &[4, 0], &[0, 4]], &[&[1, 1]]),
        ];
        for (a, b) in cases {
            assert_eq!(info(a, b), info(b, a));
        }
    }

    #[test]
    fn base_case_report() {
        let ps = PointSet::from_ints(1, &[&[0], &[1], &[2]]).unwrap();
        let r = brute_force_radon(&ps).unwrap();
        assert_eq!(r.classified.len(), 3);
        let (part, w) = r.unique().unwrap();
        assert_eq!(part.side_i(), &[1, 3]);
        assert_eq!(w, &Point::from_ints(&[1]));
        assert_eq!(r.intersecting_partitions, 1);
    }

    #[test]
    fn square_has_one_radon_partition_among_seven() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let r = brute_force_radon(&ps).unwrap();
        assert_eq!(r.classified.len(), 7);
        assert_eq!(r.intersecting_partitions, 1);
        let (part, w) = r.unique().unwrap();
        assert_eq!(part, &Partition::new(vec![1, 4], vec![2, 3], 4).unwrap());
        assert_eq!(w.coords(), &[frac(1, 2), frac(1, 2)]);
        for x in [part.side_i(), part.side_j()] {
            assert!(hull_membership(w, &ps.select(x)).is_some());
        }
    }

    #[test]
    fn degenerate_sets_are_still_classified() {
        // Three collinear points with the middle one between the others.
        let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]).unwrap();
        let r = brute_force_radon(&ps).unwrap();
        assert_eq!(r.classified.len(), 7);
        // {1,3,4} | {2} and {1,3} | {2,4} both meet only at (1,0).
        assert_eq!(r.radon_partitions.len(), 2);
        assert!(r.unique().is_none());

        // Four collinear points in the plane: overlapping segments make
        // multi-point intersections.
        let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[2, 0], &[3, 0]]).unwrap();
        let r = brute_force_radon(&ps).unwrap();
        assert!(r.classified.iter().any(|(_, c)| *c == HullIntersection::Multi));
    }
}
