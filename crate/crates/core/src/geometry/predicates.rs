use itertools::Itertools;
use num_traits::Zero;

use crate::error::{RadonError, Result};
use crate::geometry::point::{Point, PointSet};
use crate::rational::{self, Rational};

/// Exact determinant of a square matrix by rational elimination.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        let pivot_row = m[col].clone();
        for row in &mut m[col + 1..n] {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot;
            for (x, p) in row[col..n].iter_mut().zip(&pivot_row[col..n]) {
                *x -= &f * p;
            }
        }
    }
    det
}

/// Rank of a (not necessarily square) matrix.
pub fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let pivot_row = m[r].clone();
        for row in &mut m[r + 1..rows] {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot_row[col];
            for (x, p) in row[col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                *x -= &f * p;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Sign of `det[p_1 - p_0, ..., p_d - p_0]` for `d + 1` points of `R^d`.
/// Zero exactly when the points are affinely dependent.
pub fn orientation(simplex: &[Point]) -> Result<i8> {
    let refs: Vec<&Point> = simplex.iter().collect();
    orientation_of(&refs)
}

pub(crate) fn orientation_of(simplex: &[&Point]) -> Result<i8> {
    let Some(first) = simplex.first() else {
        return Err(RadonError::InvalidInput("orientation of an empty list".into()));
    };
    let d = first.dim();
    if simplex.len() != d + 1 || simplex.iter().any(|p| p.dim() != d) {
        return Err(RadonError::InvalidInput(format!(
            "orientation needs {} points of dimension {d}, got {}",
            d + 1,
            simplex.len()
        )));
    }
    let rows = simplex[1..].iter().map(|p| p.sub(first)).collect();
    Ok(rational::sign(&determinant(rows)))
}

/// First (lexicographic) set of 1-based labels witnessing a failure of
/// general position, or `None` if every `d + 1` of the points are affinely
/// independent.
///
/// With fewer than `d + 1` points the whole set is tested for affine
/// independence instead.
pub fn general_position_violation(ps: &PointSet) -> Option<Vec<usize>> {
    let d = ps.dim();
    let pts = ps.points();
    if pts.len() < d + 1 {
        let rows: Vec<Vec<Rational>> = pts[1..].iter().map(|p| p.sub(&pts[0])).collect();
        return (rank(rows) != pts.len() - 1).then(|| ps.labels().collect());
    }
    (0..pts.len()).combinations(d + 1).find_map(|idx| {
        let simplex: Vec<&Point> = idx.iter().map(|&i| &pts[i]).collect();
        let s = orientation_of(&simplex).expect("dimensions validated by PointSet");
        (s == 0).then(|| idx.iter().map(|i| i + 1).collect())
    })
}

pub fn is_general_position(ps: &PointSet) -> bool {
    general_position_violation(ps).is_none()
}

/// `Err(NotGeneralPosition)` naming the first violating subset.
pub fn require_general_position(ps: &PointSet) -> Result<()> {
    match general_position_violation(ps) {
        None => Ok(()),
        Some(subset) => Err(RadonError::NotGeneralPosition { subset }),
    }
}
