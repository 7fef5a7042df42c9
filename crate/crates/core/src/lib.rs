//! Exact Radon partitions of `d + 2` points in `R^d`.
//!
//! Three independent routes to the same answer:
//!
//! * [`recursive`]: induction on dimension. Separate an apex, project the
//!   other points through it onto a hyperplane, solve one dimension down,
//!   and lift the answer back along a ray.
//! * [`algebraic`]: the sign pattern of the affine dependence.
//! * [`oracle`]: enumerate every bipartition and classify hull
//!   intersections by exact linear programming.
//!
//! For points in general position all three must produce the same partition
//! and the same common point, and the oracle must find exactly one such
//! partition. All arithmetic is over arbitrary-precision rationals.
//!
//! ```
//! use radon_core::geometry::PointSet;
//! use radon_core::recursive::radon_recursive;
//!
//! let square = PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
//! let cert = radon_recursive(&square).unwrap();
//! assert_eq!(cert.partition.side_i(), &[1, 4]);
//! assert_eq!(cert.partition.side_j(), &[2, 3]);
//! assert_eq!(cert.witness.to_string(), "(1/2, 1/2)");
//! ```

pub mod algebraic;
pub mod certificate;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod lp;
pub mod oracle;
pub mod rational;
pub mod recursive;

pub use certificate::{Partition, RadonCertificate};
pub use error::{RadonError, Result};
pub use geometry::{Point, PointSet};
