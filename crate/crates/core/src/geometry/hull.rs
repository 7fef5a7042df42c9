//! Convex-hull queries over explicit generator lists, decided by exact LP.

use crate::geometry::point::Point;
use crate::lp::{FeasibilitySystem, FeasibleTableau, LpOutcome, Sense};
use crate::rational::{self, Rational};

/// The system `Σ c_i g_i - t_coef * dir = rhs, Σ c_i = 1, c >= 0`, with the
/// optional extra variable last.
fn membership_system(generators: &[&Point], rhs: &Point, dir: Option<&[Rational]>) -> FeasibilitySystem {
    let d = rhs.dim();
    let m = generators.len();
    let nvars = m + usize::from(dir.is_some());
    let mut sys = FeasibilitySystem::new(nvars);
    for k in 0..d {
        let mut row: Vec<Rational> = generators.iter().map(|g| g.coords()[k].clone()).collect();
        if let Some(dir) = dir {
            row.push(-&dir[k]);
        }
        sys.push(row, rhs.coords()[k].clone()).expect("row length matches");
    }
    let mut ones = vec![rational::one(); m];
    if dir.is_some() {
        ones.push(rational::zero());
    }
    sys.push(ones, rational::one()).expect("row length matches");
    sys
}

fn check_dims(x: &Point, generators: &[&Point]) {
    assert!(
        generators.iter().all(|g| g.dim() == x.dim()),
        "hull query with mixed dimensions"
    );
}

/// Convex coefficients expressing `x` over `generators`, or `None` when `x`
/// is outside their hull.
pub fn hull_membership(x: &Point, generators: &[&Point]) -> Option<Vec<Rational>> {
    check_dims(x, generators);
    if generators.is_empty() {
        return None;
    }
    crate::lp::lp_feasible(&membership_system(generators, x, None))
}

/// True if `coeffs` are nonnegative, sum to one and reproduce `x` exactly.
pub fn is_convex_certificate(x: &Point, generators: &[&Point], coeffs: &[Rational]) -> bool {
    use num_traits::Signed;
    coeffs.len() == generators.len()
        && !generators.is_empty()
        && coeffs.iter().all(|c| !c.is_negative())
        && coeffs.iter().fold(rational::zero(), |a, c| a + c) == rational::one()
        && Point::combination(generators, coeffs).as_ref() == Some(x)
}

/// Where a ray first meets a hull: `point = origin + t * (through - origin)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayHit {
    pub t: Rational,
    pub point: Point,
}

/// First point (smallest `t >= 0`) of the ray from `origin` through
/// `through` that lies in the hull of `generators`.
pub fn ray_hull_hit(origin: &Point, through: &Point, generators: &[&Point]) -> Option<RayHit> {
    check_dims(origin, generators);
    assert_ne!(origin, through, "a ray needs two distinct points");
    if generators.is_empty() {
        return None;
    }
    let dir = through.sub(origin);
    let sys = membership_system(generators, origin, Some(&dir));
    let mut objective = vec![rational::zero(); sys.num_vars()];
    objective[generators.len()] = rational::one();
    match FeasibleTableau::phase_one(&sys)?.optimize(&objective, Sense::Minimize) {
        LpOutcome::Optimal { value, .. } => {
            let point = origin.offset_by(&value, &dir);
            Some(RayHit { t: value, point })
        }
        // t >= 0 keeps the minimum bounded.
        LpOutcome::Unbounded | LpOutcome::Infeasible => None,
    }
}

pub fn ray_simplex_intersection(origin: &Point, through: &Point, generators: &[&Point]) -> Option<Point> {
    ray_hull_hit(origin, through, generators).map(|h| h.point)
}
