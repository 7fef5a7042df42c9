//! The classical route: the affine dependence of `d + 2` points splits them
//! by sign.
//!
//! For points `A_1..A_{d+2}` in `R^d` the homogeneous system
//! `Σ λ_i = 0, Σ λ_i A_i = 0` has `d + 1` equations in `d + 2` unknowns, so a
//! nonzero solution always exists; in general position it is unique up to
//! scale and has no zero entry. Positive and negative entries then give the
//! two sides, and normalizing the positive part gives the common point.

use num_traits::{Signed, Zero};

use crate::certificate::{Partition, RadonCertificate};
use crate::error::{RadonError, Result};
use crate::geometry::{require_general_position, Point, PointSet};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineDependence {
    coefficients: Vec<Rational>,
}

impl AffineDependence {
    /// Wraps `coefficients` after checking they are a nonzero affine
    /// dependence of `ps`.
    pub fn new(ps: &PointSet, coefficients: Vec<Rational>) -> Result<Self> {
        let dep = AffineDependence { coefficients };
        dep.check(ps)?;
        Ok(dep)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    fn check(&self, ps: &PointSet) -> Result<()> {
        let lambda = &self.coefficients;
        if lambda.len() != ps.len() {
            return Err(RadonError::InvalidInput(format!(
                "{} coefficients for {} points",
                lambda.len(),
                ps.len()
            )));
        }
        if lambda.iter().all(Zero::is_zero) {
            return Err(RadonError::InvalidInput("affine dependence is identically zero".into()));
        }
        if !lambda.iter().fold(rational::zero(), |a, v| a + v).is_zero() {
            return Err(RadonError::InvalidInput("affine dependence coefficients do not sum to zero".into()));
        }
        let refs: Vec<&Point> = ps.points().iter().collect();
        let combo = Point::combination(&refs, lambda).expect("nonempty point set");
        if !combo.coords().iter().all(Zero::is_zero) {
            return Err(RadonError::InvalidInput("coefficients do not annihilate the points".into()));
        }
        Ok(())
    }
}

/// A nonzero solution of `Σ λ_i = 0, Σ λ_i A_i = 0`, scaled so the first
/// nonzero entry is `+1`.
///
/// Solved by reduction to row echelon form, pivoting on the first nonzero
/// entry of each column; the first free column is set to one and the others
/// to zero.
pub fn affine_dependence(ps: &PointSet) -> Result<AffineDependence> {
    ps.require_radon_size()?;
    let n = ps.len();
    let d = ps.dim();

    let mut m: Vec<Vec<Rational>> = Vec::with_capacity(d + 1);
    m.push(vec![rational::one(); n]);
    for k in 0..d {
        m.push(ps.points().iter().map(|p| p.coords()[k].clone()).collect());
    }

    let rows = m.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let pv = m[r][col].clone();
        for v in m[r].iter_mut() {
            *v /= &pv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row[col..n].iter_mut().zip(&pivot_row[col..n]) {
                *x -= &f * p;
            }
        }
        pivot_cols.push(col);
        r += 1;
    }

    let free = (0..n).find(|c| !pivot_cols.contains(c)).expect("more unknowns than equations");
    let mut lambda = vec![rational::zero(); n];
    lambda[free] = rational::one();
    for (row, &pc) in pivot_cols.iter().enumerate() {
        lambda[pc] = -&m[row][free];
    }
    let lead = lambda.iter().find(|v| !v.is_zero()).cloned().expect("free variable is one");
    for v in lambda.iter_mut() {
        *v /= &lead;
    }
    AffineDependence::new(ps, lambda)
}

/// Splits `ps` by the signs of `dep` and builds the certificate.
pub fn radon_from_dependence(ps: &PointSet, dep: &AffineDependence) -> Result<RadonCertificate> {
    dep.check(ps)?;
    let lambda = dep.coefficients();
    if let Some(z) = lambda.iter().position(Zero::is_zero) {
        // The remaining d + 1 points carry a dependence of their own.
        let subset = ps.labels().filter(|&l| l != z + 1).collect();
        return Err(RadonError::NotGeneralPosition { subset });
    }

    let pos: Vec<usize> = ps.labels().filter(|&l| lambda[l - 1].is_positive()).collect();
    let neg: Vec<usize> = ps.labels().filter(|&l| lambda[l - 1].is_negative()).collect();
    let total: Rational = pos.iter().fold(rational::zero(), |a, &l| a + &lambda[l - 1]);
    let pos_coeffs: Vec<Rational> = pos.iter().map(|&l| &lambda[l - 1] / &total).collect();
    let neg_coeffs: Vec<Rational> = neg.iter().map(|&l| -&lambda[l - 1] / &total).collect();
    let witness = Point::combination(&ps.select(&pos), &pos_coeffs).expect("a nonzero dependence has both signs");

    let partition = Partition::new(pos.clone(), neg, ps.len())?;
    let (coeffs_i, coeffs_j) =
        if partition.side_i() == pos.as_slice() { (pos_coeffs, neg_coeffs) } else { (neg_coeffs, pos_coeffs) };
    let cert = RadonCertificate { partition, witness, coeffs_i, coeffs_j };
    cert.verify(ps)?;
    Ok(cert)
}

/// Radon certificate of a general-position instance via its affine dependence.
pub fn radon_algebraic(ps: &PointSet) -> Result<RadonCertificate> {
    ps.require_radon_size()?;
    require_general_position(ps)?;
    let dep = affine_dependence(ps)?;
    radon_from_dependence(ps, &dep)
}
