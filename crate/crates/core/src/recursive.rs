//! Radon partitions by induction on dimension.
//!
//! For `d = 1` the three points split as {two outer} | {middle}. For `d >= 2`
//! one point (the apex) is separated from the rest by a hyperplane `α`, every
//! other point is centrally projected from the apex onto `α`, and the
//! `(d-1)`-dimensional instance on `α` is solved recursively. Its sides `I'`
//! and `J'` pull back to sides `I` and `J` of the remaining points, and its
//! common point `Y'` fixes a ray from the apex. The ray meets `⟨I⟩` first at
//! `Y_1` and `⟨J⟩` first at `Y_2`; whichever comes first along the ray is the
//! common point of that side alone and the other side with the apex added.
//!
//! Every level is checked as it goes: projected points must be in general
//! position and both ray hits must exist at distinct parameters. A failure
//! there is an [`RadonError::Invariant`] error, not a different answer.

use std::cmp::Ordering;

use serde::Serialize;

use crate::certificate::{Partition, RadonCertificate};
use crate::error::{RadonError, Result};
use crate::geometry::{
    general_position_violation, ray_hull_hit, require_general_position, segment_hyperplane_intersection,
    separating_hyperplane, Chart, Hyperplane, Point, PointSet,
};
use crate::rational::Rational;

/// Lexicographically largest point's label. Such a point is always a vertex
/// of the convex hull, so it can be strictly separated from the others.
pub fn choose_apex(ps: &PointSet) -> usize {
    ps.labels().max_by(|&a, &b| ps.point(a).cmp(ps.point(b))).expect("point sets are nonempty")
}

/// Central projection of all non-apex points onto a separating hyperplane.
#[derive(Debug, Clone)]
pub struct ProjectionRecord {
    pub apex: usize,
    pub hyperplane: Hyperplane,
    pub chart: Chart,
    /// Projected points in chart coordinates (dimension `d - 1`).
    pub projected: PointSet,
    /// `label_map[k]` is the original label of projected label `k + 1`.
    pub label_map: Vec<usize>,
    /// The same points on the hyperplane, in ambient coordinates.
    pub lifted: Vec<Point>,
}

impl ProjectionRecord {
    pub fn original_label(&self, projected_label: usize) -> usize {
        self.label_map[projected_label - 1]
    }

    /// Re-checks the geometric claims of this record against `ps`: each
    /// lifted point is on the hyperplane, strictly inside its segment from
    /// the apex, and charts down to its projected point; the projected set
    /// is in general position.
    pub fn check(&self, ps: &PointSet) -> Result<()> {
        let apex = ps.point(self.apex);
        for (k, lifted) in self.lifted.iter().enumerate() {
            let target = ps.point(self.label_map[k]);
            if !self.hyperplane.contains(lifted) {
                return Err(RadonError::Invariant(format!("projection of {} is off the hyperplane", self.label_map[k])));
            }
            let dir = target.sub(apex);
            let Some(axis) = dir.iter().position(|v| !num_traits::Zero::is_zero(v)) else {
                return Err(RadonError::Invariant("apex coincides with another point".into()));
            };
            let t = (&lifted.coords()[axis] - &apex.coords()[axis]) / &dir[axis];
            let strictly_inside = num_traits::Signed::is_positive(&t) && t < crate::rational::one();
            if !strictly_inside || &apex.offset_by(&t, &dir) != lifted {
                return Err(RadonError::Invariant(format!(
                    "projection of {} is not strictly inside its segment",
                    self.label_map[k]
                )));
            }
            if self.chart.down(lifted)? != self.projected.points()[k] {
                return Err(RadonError::Invariant("chart coordinates disagree with lifted point".into()));
            }
        }
        if let Some(subset) = general_position_violation(&self.projected) {
            return Err(RadonError::Invariant(format!("projected points {subset:?} are not in general position")));
        }
        Ok(())
    }
}

/// Projects every point of `ps` other than `apex` onto a hyperplane
/// separating the apex from them, and charts the result to `R^{d-1}`.
pub fn project_through_apex(ps: &PointSet, apex: usize) -> Result<ProjectionRecord> {
    let d = ps.dim();
    if d < 2 {
        return Err(RadonError::InvalidInput("projection needs dimension at least 2".into()));
    }
    let hyperplane = separating_hyperplane(ps, apex)?;
    let chart = Chart::new(&hyperplane)?;
    let a = ps.point(apex);
    let label_map: Vec<usize> = ps.labels().filter(|&l| l != apex).collect();
    let mut lifted = Vec::with_capacity(label_map.len());
    let mut projected = Vec::with_capacity(label_map.len());
    for &l in &label_map {
        let x = segment_hyperplane_intersection(a, ps.point(l), &hyperplane)
            .ok_or_else(|| RadonError::Invariant(format!("segment {apex}-{l} does not cross the separator")))?;
        projected.push(chart.down(&x)?);
        lifted.push(x);
    }

    let to_original = |subset: Vec<usize>| {
        let mut s: Vec<usize> = subset.into_iter().map(|k| label_map[k - 1]).chain([apex]).collect();
        s.sort_unstable();
        s
    };
    let projected = match PointSet::new(d - 1, projected) {
        Ok(p) => p,
        Err(_) => {
            // Two projections coincide: they are collinear with the apex.
            let pts = &lifted;
            let (i, j) = (0..pts.len())
                .flat_map(|i| (i + 1..pts.len()).map(move |j| (i, j)))
                .find(|&(i, j)| pts[i] == pts[j])
                .expect("PointSet::new only fails here on duplicates");
            return Err(RadonError::NotGeneralPosition { subset: to_original(vec![i + 1, j + 1]) });
        }
    };
    if let Some(subset) = general_position_violation(&projected) {
        return Err(RadonError::NotGeneralPosition { subset: to_original(subset) });
    }
    Ok(ProjectionRecord { apex, hyperplane, chart, projected, label_map, lifted })
}

/// Which side of the sub-partition the nearer ray hit belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    I,
    J,
}

/// Ray hits recorded while lifting one level.
#[derive(Debug, Clone)]
pub struct LiftTrace {
    /// The sub-instance's common point, on the hyperplane.
    pub sub_witness: Point,
    /// Nearer hit; lies on the segment from the apex to `y2`.
    pub y1: Point,
    pub y2: Point,
    pub t1: Rational,
    pub t2: Rational,
    pub near_side: Side,
    /// Both sides in original labels: `(near side, far side)`.
    pub near_labels: Vec<usize>,
    pub far_labels: Vec<usize>,
}

/// One induction step: the projection taken and the lift back.
#[derive(Debug, Clone)]
pub struct RecursionStep {
    /// The instance this step was applied to.
    pub instance: PointSet,
    pub projection: ProjectionRecord,
    pub lift: LiftTrace,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum ApexRule {
    #[default]
    LexicographicMax,
    /// Apex label per level, outermost first. Each must be a hull vertex of
    /// that level's instance.
    Forced(Vec<usize>),
}

#[derive(Debug, Clone, Default)]
pub struct RecursiveOptions {
    pub apex: ApexRule,
    /// Harness self-test only: picks the farther ray hit instead of the
    /// nearer one, which yields invalid certificates.
    #[doc(hidden)]
    pub flip_nearness: bool,
}

#[derive(Debug, Clone)]
pub struct RecursiveOutcome {
    pub certificate: RadonCertificate,
    /// Outermost level first; `d - 1` entries.
    pub steps: Vec<RecursionStep>,
}

pub fn radon_recursive(ps: &PointSet) -> Result<RadonCertificate> {
    radon_recursive_with(ps, &RecursiveOptions::default()).map(|o| o.certificate)
}

pub fn radon_recursive_with(ps: &PointSet, opts: &RecursiveOptions) -> Result<RecursiveOutcome> {
    ps.require_radon_size()?;
    require_general_position(ps)?;
    let mut steps = Vec::with_capacity(ps.dim() - 1);
    let (partition, witness) = solve(ps, opts, 0, &mut steps)?;
    let certificate = RadonCertificate::from_witness(ps, partition, witness)?;
    Ok(RecursiveOutcome { certificate, steps })
}

fn solve(ps: &PointSet, opts: &RecursiveOptions, depth: usize, steps: &mut Vec<RecursionStep>) -> Result<(Partition, Point)> {
    if ps.dim() == 1 {
        let mut order: Vec<usize> = ps.labels().collect();
        order.sort_by(|&a, &b| ps.point(a).cmp(ps.point(b)));
        let middle = order[1];
        let partition = Partition::new(vec![order[0], order[2]], vec![middle], 3)?;
        return Ok((partition, ps.point(middle).clone()));
    }

    let apex = match &opts.apex {
        ApexRule::LexicographicMax => choose_apex(ps),
        ApexRule::Forced(labels) => *labels
            .get(depth)
            .ok_or_else(|| RadonError::InvalidInput(format!("no forced apex for recursion level {depth}")))?,
    };
    let projection = project_through_apex(ps, apex)?;
    let step_index = steps.len();
    let (sub_partition, sub_witness) = solve(&projection.projected, opts, depth + 1, steps)?;

    let pull_back = |side: &[usize]| side.iter().map(|&k| projection.original_label(k)).collect::<Vec<_>>();
    let side_i = pull_back(sub_partition.side_i());
    let side_j = pull_back(sub_partition.side_j());
    let apex_point = ps.point(apex);
    let through = projection.chart.up(&sub_witness);

    let hit = |side: &[usize], name: &str| {
        ray_hull_hit(apex_point, &through, &ps.select(side))
            .ok_or_else(|| RadonError::Invariant(format!("ray from apex {apex} misses side {name} {side:?}")))
    };
    let hit_i = hit(&side_i, "I")?;
    let hit_j = hit(&side_j, "J")?;

    let mut near_is_i = match hit_i.t.cmp(&hit_j.t) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => {
            return Err(RadonError::Invariant(format!("ray from apex {apex} meets both sides at the same parameter")))
        }
    };
    if opts.flip_nearness {
        near_is_i = !near_is_i;
    }
    let (near_labels, far_labels, near, far, near_side) = if near_is_i {
        (side_i, side_j, hit_i, hit_j, Side::I)
    } else {
        (side_j, side_i, hit_j, hit_i, Side::J)
    };

    let mut with_apex = far_labels.clone();
    with_apex.push(apex);
    let partition = Partition::new(near_labels.clone(), with_apex, ps.len())?;
    let witness = near.point.clone();

    let lift = LiftTrace {
        sub_witness: through,
        y1: near.point,
        y2: far.point,
        t1: near.t,
        t2: far.t,
        near_side,
        near_labels,
        far_labels,
    };
    // Outermost first, although the recursion finishes innermost first.
    steps.insert(step_index, RecursionStep { instance: ps.clone(), projection, lift });
    Ok((partition, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn apex_is_lexicographic_max() {
        assert_eq!(choose_apex(&PointSet::from_ints(1, &[&[0], &[1], &[2]]).unwrap()), 3);
        assert_eq!(choose_apex(&PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap()), 4);
        assert_eq!(choose_apex(&PointSet::from_ints(2, &[&[2, 0], &[0, 5], &[2, 3], &[1, 1]]).unwrap()), 3);
    }

    #[test]
    fn base_case() {
        let ps = PointSet::from_ints(1, &[&[0], &[1], &[2]]).unwrap();
        let out = radon_recursive_with(&ps, &RecursiveOptions::default()).unwrap();
        assert!(out.steps.is_empty());
        assert_eq!(out.certificate.partition.side_i(), &[1, 3]);
        assert_eq!(out.certificate.witness, Point::from_ints(&[1]));

        let shuffled = PointSet::from_ints(1, &[&[5], &[-3], &[2]]).unwrap();
        let cert = radon_recursive(&shuffled).unwrap();
        assert_eq!(cert.partition.side_i(), &[1, 2]);
        assert_eq!(cert.partition.side_j(), &[3]);
    }

    #[test]
    fn projection_in_the_plane() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[2, 0], &[0, 2], &[3, 3]]).unwrap();
        assert_eq!(choose_apex(&ps), 4);
        let rec = project_through_apex(&ps, 4).unwrap();
        assert_eq!(rec.label_map, vec![1, 2, 3]);
        assert_eq!(rec.projected.dim(), 1);
        rec.check(&ps).unwrap();
        // Independently: each lifted point is on the line apex-A_i and on α.
        for (k, x) in rec.lifted.iter().enumerate() {
            let a = Point::from_ints(&[3, 3]);
            let b = ps.point(k + 1);
            let u = x.sub(&a);
            let v = b.sub(&a);
            assert_eq!(&u[0] * &v[1], &u[1] * &v[0]);
            assert!(rec.hyperplane.contains(x));
        }
        let p = rec.projected.points();
        assert!(p[0] != p[1] && p[1] != p[2] && p[0] != p[2]);
    }

    #[test]
    fn projection_rejects_one_dimension_and_interior_apex() {
        let line = PointSet::from_ints(1, &[&[0], &[1], &[2]]).unwrap();
        assert!(project_through_apex(&line, 3).is_err());
        let tri = PointSet::from_ints(2, &[&[0, 0], &[3, 0], &[0, 3], &[1, 1]]).unwrap();
        assert!(project_through_apex(&tri, 4).unwrap_err().is_degenerate());
    }

    #[test]
    fn square_diagonals() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let out = radon_recursive_with(&ps, &RecursiveOptions::default()).unwrap();
        assert_eq!(out.certificate.partition, Partition::new(vec![1, 4], vec![2, 3], 4).unwrap());
        assert_eq!(out.certificate.witness.coords(), &[frac(1, 2), frac(1, 2)]);
        assert_eq!(out.steps.len(), 1);
        let lift = &out.steps[0].lift;
        assert!(lift.t1 < lift.t2);
    }

    #[test]
    fn three_dimensional_trace() {
        // Apex (4,4,4) above a tetrahedron-ish base, one level per dimension drop.
        let ps = PointSet::from_ints(3, &[&[0, 0, 0], &[3, 0, 1], &[0, 3, 1], &[1, 1, 3], &[4, 4, 4]]).unwrap();
        let out = radon_recursive_with(&ps, &RecursiveOptions::default()).unwrap();
        assert_eq!(out.steps.len(), 2);
        assert_eq!(out.steps[0].instance.dim(), 3);
        assert_eq!(out.steps[1].instance.dim(), 2);
        for s in &out.steps {
            s.projection.check(&s.instance).unwrap();
        }
        let alg = crate::algebraic::radon_algebraic(&ps).unwrap();
        assert_eq!(out.certificate, alg);
    }

    #[test]
    fn forced_apexes_are_affinely_equivariant() {
        let ps = PointSet::from_ints(3, &[&[0, 0, 0], &[5, 1, 0], &[1, 4, 1], &[2, 2, 6], &[-1, 3, 2]]).unwrap();
        // x -> M x + s with det M = -11/2.
        let m = [[frac(1, 2), int(2), int(0)], [int(0), int(1), int(-1)], [int(3), int(0), int(1)]];
        let s = [int(1), frac(-2, 3), int(5)];
        let map = |p: &Point| {
            Point::new((0..3).map(|r| crate::rational::dot(&m[r], p.coords()) + &s[r]).collect()).unwrap()
        };
        let moved = ps.map_points(map).unwrap();

        let base = radon_recursive_with(&ps, &RecursiveOptions::default()).unwrap();
        let apexes: Vec<usize> = base.steps.iter().map(|s| s.projection.apex).collect();
        let forced = RecursiveOptions { apex: ApexRule::Forced(apexes.clone()), ..Default::default() };
        let out = radon_recursive_with(&moved, &forced).unwrap();

        assert_eq!(out.certificate.partition, base.certificate.partition);
        assert_eq!(out.certificate.witness, map(&base.certificate.witness));
        for (a, b) in base.steps.iter().zip(&out.steps) {
            assert_eq!(a.lift.near_labels, b.lift.near_labels);
            assert_eq!(a.lift.far_labels, b.lift.far_labels);
        }
    }

    #[test]
    fn forced_apex_and_flipped_nearness() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let forced = RecursiveOptions { apex: ApexRule::Forced(vec![1]), ..Default::default() };
        let out = radon_recursive_with(&ps, &forced).unwrap();
        assert_eq!(out.steps[0].projection.apex, 1);
        assert_eq!(out.certificate.witness.coords(), &[frac(1, 2), frac(1, 2)]);

        let broken = RecursiveOptions { flip_nearness: true, ..Default::default() };
        assert!(radon_recursive_with(&ps, &broken).is_err());

        let missing = RecursiveOptions { apex: ApexRule::Forced(vec![]), ..Default::default() };
        assert!(radon_recursive_with(&ps, &missing).is_err());
    }

    #[test]
    fn degenerate_inputs_name_the_subset() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 1], &[5, 0], &[2, 2]]).unwrap();
        assert_eq!(radon_recursive(&ps).unwrap_err(), RadonError::NotGeneralPosition { subset: vec![1, 2, 4] });
    }

    #[test]
    fn witness_is_exact() {
        let ps = PointSet::new(
            2,
            vec![
                Point::new(vec![frac(1, 3), int(0)]).unwrap(),
                Point::new(vec![int(4), frac(-2, 7)]).unwrap(),
                Point::new(vec![int(1), int(5)]).unwrap(),
                Point::new(vec![int(2), int(1)]).unwrap(),
            ],
        )
        .unwrap();
        let rec = radon_recursive(&ps).unwrap();
        let alg = crate::algebraic::radon_algebraic(&ps).unwrap();
        assert_eq!(rec, alg);
    }
}
