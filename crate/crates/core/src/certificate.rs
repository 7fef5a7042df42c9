use std::fmt;

use crate::error::{RadonError, Result};
use crate::geometry::{hull_membership, is_convex_certificate, Point, PointSet};
use crate::rational::Rational;

/// An unordered bipartition of labels `1..=n`, stored canonically: both
/// sides sorted, label 1 on `side_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    side_i: Vec<usize>,
    side_j: Vec<usize>,
}

impl Partition {
    /// Canonicalizes `(a, b)`, checking it is a bipartition of `1..=n`.
    pub fn new(mut a: Vec<usize>, mut b: Vec<usize>, n: usize) -> Result<Self> {
        a.sort_unstable();
        b.sort_unstable();
        if a.is_empty() || b.is_empty() {
            return Err(RadonError::InvalidInput("both sides of a partition must be nonempty".into()));
        }
        let mut all: Vec<usize> = a.iter().chain(&b).copied().collect();
        all.sort_unstable();
        if all != (1..=n).collect::<Vec<_>>() {
            return Err(RadonError::InvalidInput(format!("{a:?} | {b:?} is not a bipartition of 1..={n}")));
        }
        if b[0] == 1 {
            std::mem::swap(&mut a, &mut b);
        }
        Ok(Partition { side_i: a, side_j: b })
    }

    pub fn side_i(&self) -> &[usize] {
        &self.side_i
    }

    pub fn side_j(&self) -> &[usize] {
        &self.side_j
    }

    pub fn len(&self) -> usize {
        self.side_i.len() + self.side_j.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All `2^{n-1} - 1` canonical bipartitions of `1..=n`, ordered by the
    /// bitmask of labels `2..=n` placed on the second side.
    pub fn enumerate(n: usize) -> impl Iterator<Item = Partition> {
        assert!((2..usize::BITS as usize).contains(&n), "enumeration needs 2 <= n < {}", usize::BITS);
        (1usize..(1 << (n - 1))).map(move |mask| {
            let (mut i, mut j) = (vec![1], Vec::new());
            for l in 2..=n {
                if mask >> (l - 2) & 1 == 1 {
                    j.push(l);
                } else {
                    i.push(l);
                }
            }
            Partition { side_i: i, side_j: j }
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} | {:?}", self.side_i, self.side_j)
    }
}

/// A partition together with a point of both hulls and the convex
/// coefficients that put it there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadonCertificate {
    pub partition: Partition,
    pub witness: Point,
    /// Coefficients over `partition.side_i()`, in label order.
    pub coeffs_i: Vec<Rational>,
    /// Coefficients over `partition.side_j()`, in label order.
    pub coeffs_j: Vec<Rational>,
}

impl RadonCertificate {
    /// Recovers both coefficient vectors for `witness` by hull membership.
    pub fn from_witness(ps: &PointSet, partition: Partition, witness: Point) -> Result<Self> {
        let side = |labels: &[usize], name: &str| {
            hull_membership(&witness, &ps.select(labels)).ok_or_else(|| {
                RadonError::Invariant(format!("witness {witness} is not in the hull of side {name} {labels:?}"))
            })
        };
        let coeffs_i = side(partition.side_i(), "I")?;
        let coeffs_j = side(partition.side_j(), "J")?;
        let cert = RadonCertificate { partition, witness, coeffs_i, coeffs_j };
        cert.verify(ps)?;
        Ok(cert)
    }

    /// Exact check: both coefficient vectors are nonnegative, sum to one and
    /// reproduce the witness.
    pub fn verify(&self, ps: &PointSet) -> Result<()> {
        if self.partition.len() != ps.len() {
            return Err(RadonError::Invariant(format!(
                "certificate covers {} labels, instance has {}",
                self.partition.len(),
                ps.len()
            )));
        }
        if !is_convex_certificate(&self.witness, &ps.select(self.partition.side_i()), &self.coeffs_i) {
            return Err(RadonError::Invariant(format!("side I coefficients do not certify {}", self.witness)));
        }
        if !is_convex_certificate(&self.witness, &ps.select(self.partition.side_j()), &self.coeffs_j) {
            return Err(RadonError::Invariant(format!("side J coefficients do not certify {}", self.witness)));
        }
        Ok(())
    }
}
