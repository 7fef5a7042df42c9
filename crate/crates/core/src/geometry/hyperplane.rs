use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{RadonError, Result};
use crate::geometry::point::{Point, PointSet};
use crate::lp::{lp_feasible, FeasibilitySystem};
use crate::rational::{self, Rational};

/// `{x : normal · x = offset}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperplane {
    #[serde(with = "rational::serde_str::vec")]
    normal: Vec<Rational>,
    #[serde(with = "rational::serde_str")]
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(RadonError::InvalidInput("hyperplane normal is zero".into()));
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// `normal · x - offset`; positive on the normal's side.
    pub fn eval(&self, x: &Point) -> Rational {
        rational::dot(&self.normal, x.coords()) - &self.offset
    }

    pub fn side(&self, x: &Point) -> i8 {
        rational::sign(&self.eval(x))
    }

    pub fn contains(&self, x: &Point) -> bool {
        self.eval(x).is_zero()
    }
}

/// A hyperplane with the point `apex` strictly on its positive side and every
/// other point of `ps` strictly on the negative side.
///
/// The normal is a vertex of `{w : w · (A_apex - A_i) >= 1 for all i != apex}`
/// found by the exact simplex; the offset is the midpoint between the apex
/// value and the largest value among the others.
pub fn separating_hyperplane(ps: &PointSet, apex: usize) -> Result<Hyperplane> {
    if apex == 0 || apex > ps.len() {
        return Err(RadonError::InvalidInput(format!("apex label {apex} out of range 1..={}", ps.len())));
    }
    let d = ps.dim();
    let a = ps.point(apex);
    let others: Vec<usize> = ps.labels().filter(|&l| l != apex).collect();

    // Variables: w+ (d), w- (d), one surplus per other point.
    let nvars = 2 * d + others.len();
    let mut sys = FeasibilitySystem::new(nvars);
    for (k, &l) in others.iter().enumerate() {
        let diff = a.sub(ps.point(l));
        let mut row = vec![rational::zero(); nvars];
        for j in 0..d {
            row[j] = diff[j].clone();
            row[d + j] = -&diff[j];
        }
        row[2 * d + k] = -rational::one();
        sys.push(row, rational::one())?;
    }
    let x = lp_feasible(&sys).ok_or_else(|| {
        RadonError::Degenerate(format!("point {apex} lies in the convex hull of the others and cannot be separated"))
    })?;
    let normal: Vec<Rational> = (0..d).map(|j| &x[j] - &x[d + j]).collect();

    let apex_value = rational::dot(&normal, a.coords());
    let max_other = others
        .iter()
        .map(|&l| rational::dot(&normal, ps.point(l).coords()))
        .max()
        .unwrap_or_else(|| &apex_value - rational::one());
    let offset = (apex_value + max_other) / rational::int(2);
    let h = Hyperplane::new(normal, offset)?;

    if h.side(a) != 1 || others.iter().any(|&l| h.side(ps.point(l)) != -1) {
        return Err(RadonError::Invariant("separating hyperplane fails strict separation".into()));
    }
    Ok(h)
}

/// The point where segment `ab` crosses `h`, if `a` and `b` lie strictly on
/// opposite sides.
pub fn segment_hyperplane_intersection(a: &Point, b: &Point, h: &Hyperplane) -> Option<Point> {
    let fa = h.eval(a);
    let fb = h.eval(b);
    if rational::sign(&fa) * rational::sign(&fb) >= 0 {
        return None;
    }
    let t = &fa / (&fa - &fb);
    Some(a.offset_by(&t, &b.sub(a)))
}

/// Exact affine coordinates on a hyperplane of `R^d`, identifying it with
/// `R^{d-1}`.
///
/// The coordinate with the largest `|normal_k|` (lowest index on ties) is
/// solved for; the remaining `d - 1` coordinates are the chart coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    hyperplane: Hyperplane,
    eliminated: usize,
    origin: Point,
    basis: Vec<Vec<Rational>>,
}

impl Chart {
    pub fn new(h: &Hyperplane) -> Result<Self> {
        let d = h.dim();
        if d < 2 {
            return Err(RadonError::InvalidInput("a chart needs ambient dimension at least 2".into()));
        }
        let n = h.normal();
        let mut k = 0;
        for j in 1..d {
            if n[j].abs() > n[k].abs() {
                k = j;
            }
        }
        let mut origin = vec![rational::zero(); d];
        origin[k] = h.offset() / &n[k];
        let basis = (0..d)
            .filter(|&j| j != k)
            .map(|j| {
                let mut v = vec![rational::zero(); d];
                v[j] = rational::one();
                v[k] = -(&n[j] / &n[k]);
                v
            })
            .collect();
        Ok(Chart { hyperplane: h.clone(), eliminated: k, origin: Point::new(origin)?, basis })
    }

    pub fn hyperplane(&self) -> &Hyperplane {
        &self.hyperplane
    }

    pub fn origin(&self) -> &Point {
        &self.origin
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Index of the ambient coordinate that is solved for.
    pub fn eliminated_coordinate(&self) -> usize {
        self.eliminated
    }

    /// Chart coordinates of a point on the hyperplane.
    pub fn down(&self, x: &Point) -> Result<Point> {
        if x.dim() != self.hyperplane.dim() {
            return Err(RadonError::InvalidInput(format!(
                "point has dimension {}, chart lives in dimension {}",
                x.dim(),
                self.hyperplane.dim()
            )));
        }
        if !self.hyperplane.contains(x) {
            return Err(RadonError::InvalidInput(format!("point {x} is not on the hyperplane")));
        }
        let coords =
            x.coords().iter().enumerate().filter(|&(j, _)| j != self.eliminated).map(|(_, c)| c.clone()).collect();
        Point::new(coords)
    }

    /// The point of the hyperplane with chart coordinates `y`.
    pub fn up(&self, y: &Point) -> Point {
        assert_eq!(y.dim() + 1, self.hyperplane.dim(), "chart coordinates have the wrong dimension");
        let mut p = self.origin.clone();
        for (t, v) in y.coords().iter().zip(&self.basis) {
            p = p.offset_by(t, v);
        }
        p
    }
}

pub fn build_chart(h: &Hyperplane) -> Result<Chart> {
    Chart::new(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::predicates::{orientation, rank};
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn plane(normal: &[i64], offset: i64) -> Hyperplane {
        Hyperplane::new(normal.iter().map(|&v| int(v)).collect(), int(offset)).unwrap()
    }

    #[test]
    fn zero_normal_is_rejected() {
        assert!(Hyperplane::new(vec![int(0), int(0)], int(1)).is_err());
    }

    #[test]
    fn separates_in_one_dimension() {
        let ps = PointSet::from_ints(1, &[&[0], &[1], &[2]]).unwrap();
        let h = separating_hyperplane(&ps, 3).unwrap();
        assert!(h.normal()[0].is_positive());
        let cut = h.offset() / &h.normal()[0];
        assert!(cut > int(1) && cut < int(2));
        assert_eq!(cut, frac(3, 2));
    }

    #[test]
    fn separates_square_corner() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let h = separating_hyperplane(&ps, 4).unwrap();
        assert_eq!(h.side(ps.point(4)), 1);
        for l in 1..=3 {
            assert_eq!(h.side(ps.point(l)), -1);
        }
        // This construction lands on the symmetric normal.
        assert_eq!(h.normal(), &[int(1), int(1)]);
        assert!(h.offset() > &int(1) && h.offset() < &int(2));
    }

    #[test]
    fn interior_apex_cannot_be_separated() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[3, 0], &[0, 3], &[1, 1]]).unwrap();
        assert!(separating_hyperplane(&ps, 4).unwrap_err().is_degenerate());
        assert!(separating_hyperplane(&ps, 5).is_err());
    }

    #[test]
    fn segment_crossings() {
        let h = plane(&[1, 1], 2);
        assert_eq!(
            segment_hyperplane_intersection(&Point::from_ints(&[0, 0]), &Point::from_ints(&[2, 2]), &h),
            Some(Point::from_ints(&[1, 1]))
        );
        let far = plane(&[1, 0], 5);
        assert_eq!(segment_hyperplane_intersection(&Point::from_ints(&[0, 0]), &Point::from_ints(&[1, 0]), &far), None);
        let z = plane(&[0, 0, 1], 1);
        assert_eq!(
            segment_hyperplane_intersection(&Point::from_ints(&[0, 0, 0]), &Point::from_ints(&[0, 0, 3]), &z),
            Some(Point::from_ints(&[0, 0, 1]))
        );
        // Touching is not crossing.
        assert_eq!(segment_hyperplane_intersection(&Point::from_ints(&[0, 0]), &Point::from_ints(&[1, 1]), &h), None);
    }

    #[test]
    fn axis_aligned_charts() {
        let c = build_chart(&plane(&[0, 0, 1], 1)).unwrap();
        assert_eq!(c.origin(), &Point::from_ints(&[0, 0, 1]));
        assert_eq!(c.basis(), &[vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]]);
        assert_eq!(c.down(&Point::from_ints(&[2, 3, 1])).unwrap(), Point::from_ints(&[2, 3]));
        assert_eq!(c.up(&Point::from_ints(&[2, 3])), Point::from_ints(&[2, 3, 1]));
        assert!(c.down(&Point::from_ints(&[0, 0, 5])).is_err());

        let c = build_chart(&plane(&[1, 0], 0)).unwrap();
        assert_eq!(c.origin(), &Point::from_ints(&[0, 0]));
        assert_eq!(c.basis(), &[vec![int(0), int(1)]]);
    }

    #[test]
    fn chart_needs_two_dimensions() {
        assert!(build_chart(&plane(&[1], 0)).is_err());
    }

    #[test]
    fn ties_eliminate_lowest_index() {
        let c = build_chart(&plane(&[-2, 2, 1], 4)).unwrap();
        assert_eq!(c.eliminated_coordinate(), 0);
    }

    fn hyperplane_strategy(d: usize) -> impl Strategy<Value = Hyperplane> {
        (prop::collection::vec(-5i64..=5, d), -10i64..=10)
            .prop_filter("nonzero normal", |(n, _)| n.iter().any(|&v| v != 0))
            .prop_map(|(n, c)| plane(&n, c))
    }

    proptest! {
        #[test]
        fn chart_round_trip_and_basis(h in hyperplane_strategy(4), y in prop::collection::vec((-9i64..9, 1i64..5), 3)) {
            let c = build_chart(&h).unwrap();
            prop_assert!(h.contains(c.origin()));
            for v in c.basis() {
                prop_assert!(rational::dot(h.normal(), v).is_zero());
            }
            prop_assert_eq!(rank(c.basis().to_vec()), 3);
            let y = Point::new(y.iter().map(|&(n, d)| frac(n, d)).collect()).unwrap();
            let x = c.up(&y);
            prop_assert!(h.contains(&x));
            prop_assert_eq!(c.down(&x).unwrap(), y);
        }

        #[test]
        fn chart_preserves_affine_independence(h in hyperplane_strategy(3), ys in prop::collection::vec(-3i64..=3, 6)) {
            let c = build_chart(&h).unwrap();
            let down: Vec<Point> = ys.chunks(2).map(Point::from_ints).collect();
            let up: Vec<Point> = down.iter().map(|y| c.up(y)).collect();
            // Three points on a plane in R^3 are independent iff the edge vectors have rank 2.
            let up_rank = rank(vec![up[1].sub(&up[0]), up[2].sub(&up[0])]);
            let down_independent = orientation(&down).unwrap() != 0;
            prop_assert_eq!(up_rank == 2, down_independent);
        }

        #[test]
        fn crossing_is_on_plane_and_strictly_inside(
            h in hyperplane_strategy(3),
            a in prop::collection::vec(-9i64..9, 3),
            b in prop::collection::vec(-9i64..9, 3),
        ) {
            let (a, b) = (Point::from_ints(&a), Point::from_ints(&b));
            if let Some(x) = segment_hyperplane_intersection(&a, &b, &h) {
                prop_assert!(h.contains(&x));
                let dir = b.sub(&a);
                let k = dir.iter().position(|v| !v.is_zero()).unwrap();
                let t = (&x.coords()[k] - &a.coords()[k]) / &dir[k];
                prop_assert!(t.is_positive() && t < int(1));
                prop_assert_eq!(a.offset_by(&t, &dir), x);
            }
        }
    }
}
