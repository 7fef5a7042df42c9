//! Exact geometric kernel: points, orientation, hyperplanes, charts and
//! convex-hull queries.

pub mod hull;
pub mod hyperplane;
pub mod point;
pub mod predicates;

pub use hull::{hull_membership, is_convex_certificate, ray_hull_hit, ray_simplex_intersection, RayHit};
pub use hyperplane::{build_chart, segment_hyperplane_intersection, separating_hyperplane, Chart, Hyperplane};
pub use point::{Point, PointSet};
pub use predicates::{
    general_position_violation, is_general_position, orientation, require_general_position,
};
