use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{RadonError, Result};
use crate::rational::{self, Rational};

/// A point of `R^d` with exact coordinates.
///
/// Ordering is lexicographic on coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point {
    #[serde(with = "rational::serde_str::vec")]
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(RadonError::InvalidInput("a point needs at least one coordinate".into()));
        }
        Ok(Point { coords })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        Point::new(coords.iter().map(|&c| rational::int(c)).collect()).expect("nonempty coordinates")
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    /// `self - other` as a plain vector.
    pub fn sub(&self, other: &Point) -> Vec<Rational> {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect()
    }

    /// `self + t * dir`.
    pub fn offset_by(&self, t: &Rational, dir: &[Rational]) -> Point {
        Point { coords: self.coords.iter().zip(dir).map(|(a, v)| a + t * v).collect() }
    }

    /// `Σ weights[i] * points[i]`; `None` for an empty list.
    pub fn combination(points: &[&Point], weights: &[Rational]) -> Option<Point> {
        let first = points.first()?;
        let mut acc = vec![rational::zero(); first.dim()];
        for (p, w) in points.iter().zip(weights) {
            for (a, c) in acc.iter_mut().zip(&p.coords) {
                *a += w * c;
            }
        }
        Some(Point { coords: acc })
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A labelled configuration of points in `R^dim`. Labels run `1..=len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if dim == 0 {
            return Err(RadonError::InvalidInput("dimension must be at least 1".into()));
        }
        if points.is_empty() {
            return Err(RadonError::InvalidInput("a point set needs at least one point".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.dim() != dim {
                return Err(RadonError::InvalidInput(format!(
                    "point {} has dimension {}, expected {dim}",
                    i + 1,
                    p.dim()
                )));
            }
        }
        let mut seen = HashSet::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if !seen.insert(p) {
                let first = points.iter().position(|q| q == p).unwrap() + 1;
                return Err(RadonError::InvalidInput(format!("points {first} and {} coincide", i + 1)));
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn from_ints(dim: usize, points: &[&[i64]]) -> Result<Self> {
        PointSet::new(dim, points.iter().map(|p| Point::from_ints(p)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// The point with 1-based `label`.
    pub fn point(&self, label: usize) -> &Point {
        &self.points[label - 1]
    }

    pub fn labels(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.points.len()
    }

    /// Points for a list of 1-based labels.
    pub fn select(&self, labels: &[usize]) -> Vec<&Point> {
        labels.iter().map(|&l| self.point(l)).collect()
    }

    /// Errors unless this is a Radon instance: `d + 2` points in `R^d`.
    pub fn require_radon_size(&self) -> Result<()> {
        if self.len() != self.dim + 2 {
            return Err(RadonError::InvalidInput(format!(
                "expected {} points in dimension {}, got {}",
                self.dim + 2,
                self.dim,
                self.len()
            )));
        }
        Ok(())
    }

    /// Applies `f` to every point, keeping labels.
    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> Result<PointSet> {
        let points: Vec<Point> = self.points.iter().map(f).collect();
        let dim = points[0].dim();
        PointSet::new(dim, points)
    }
}
