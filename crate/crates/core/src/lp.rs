//! Exact linear programming over equality systems with nonnegative variables.
//!
//! Dense two-phase simplex with Bland's rule, so every run terminates, and
//! fraction-free integer pivoting, so every answer is exact. Systems here are tiny (a few dozen
//! variables at most), so nothing is done about sparsity or bit growth.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{RadonError, Result};
use crate::rational::{self, Rational};

/// `A x = b, x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilitySystem {
    num_vars: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

impl FeasibilitySystem {
    pub fn new(num_vars: usize) -> Self {
        FeasibilitySystem { num_vars, rows: Vec::new(), rhs: Vec::new() }
    }

    pub fn from_rows(num_vars: usize, rows: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Result<Self> {
        if rows.len() != rhs.len() {
            return Err(RadonError::InvalidInput(format!(
                "{} constraint rows but {} right-hand sides",
                rows.len(),
                rhs.len()
            )));
        }
        let mut sys = FeasibilitySystem::new(num_vars);
        for (row, b) in rows.into_iter().zip(rhs) {
            sys.push(row, b)?;
        }
        Ok(sys)
    }

    /// Appends the constraint `row · x = rhs`.
    pub fn push(&mut self, row: Vec<Rational>, rhs: Rational) -> Result<()> {
        if row.len() != self.num_vars {
            return Err(RadonError::InvalidInput(format!(
                "constraint has {} coefficients, system has {} variables",
                row.len(),
                self.num_vars
            )));
        }
        self.rows.push(row);
        self.rhs.push(rhs);
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_constraints(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// Exact check of `A x = b` and `x >= 0`.
    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && x.iter().all(|v| !v.is_negative())
            && self.rows.iter().zip(&self.rhs).all(|(row, b)| &rational::dot(row, x) == b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, solution: Vec<Rational> },
    Unbounded,
    Infeasible,
}

impl LpOutcome {
    pub fn optimal(self) -> Option<(Rational, Vec<Rational>)> {
        match self {
            LpOutcome::Optimal { value, solution } => Some((value, solution)),
            _ => None,
        }
    }
}

/// Returns a basic feasible solution, or `None` when the system is infeasible.
pub fn lp_feasible(sys: &FeasibilitySystem) -> Option<Vec<Rational>> {
    FeasibleTableau::phase_one(sys).map(|t| t.solution())
}

pub fn lp_optimize(sys: &FeasibilitySystem, objective: &[Rational], sense: Sense) -> LpOutcome {
    match FeasibleTableau::phase_one(sys) {
        Some(t) => t.optimize(objective, sense),
        None => LpOutcome::Infeasible,
    }
}

/// Integer tableau over a common positive denominator: the true tableau is
/// `rows / denom`. Each row holds one entry per column followed by the
/// right-hand side. Pivots use exact integer division (fraction-free
/// elimination), which keeps every entry a small-ish integer minor instead
/// of a rational that needs a gcd after each operation.
#[derive(Debug, Clone)]
struct Tableau {
    rows: Vec<Vec<BigInt>>,
    /// Reduced costs of the current (minimization) objective, times `denom`.
    cost: Vec<BigInt>,
    basis: Vec<usize>,
    denom: BigInt,
}

enum Termination {
    Optimal,
    Unbounded,
}

/// Scales a rational row to integers by the lcm of its denominators.
fn integer_row<'a>(values: impl Iterator<Item = &'a Rational> + Clone) -> Vec<BigInt> {
    let lcm = values.clone().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    values.map(|v| v.numer() * (&lcm / v.denom())).collect()
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigInt {
        self.rows[i].last().expect("rows end with the right-hand side")
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        debug_assert!(!p.is_zero());
        let pivot_row = self.rows[r].clone();
        let update = |row: &mut [BigInt], denom: &BigInt| {
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                let mut t = &*v * &p;
                if !f.is_zero() && !pv.is_zero() {
                    t -= pv * &f;
                }
                *v = t / denom;
            }
        };
        for i in 0..self.rows.len() {
            if i != r {
                update(&mut self.rows[i], &self.denom);
            }
        }
        let n = self.cost.len();
        let mut cost = std::mem::take(&mut self.cost);
        cost.push(BigInt::zero());
        update(&mut cost, &self.denom);
        cost.truncate(n);
        self.cost = cost;

        self.denom = p;
        if self.denom.is_negative() {
            self.denom = -&self.denom;
            for v in self.rows.iter_mut().flatten().chain(self.cost.iter_mut()) {
                *v = -&*v;
            }
        }
        self.basis[r] = col;
    }

    /// Minimizes with Bland's rule: lowest-index entering column, ties in the
    /// ratio test broken by lowest basic variable index.
    fn run(&mut self) -> Termination {
        loop {
            let Some(col) = self.cost.iter().position(|c| c.is_negative()) else {
                return Termination::Optimal;
            };
            let mut best: Option<usize> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][col].is_positive() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(bi) => {
                        // rhs_i / a_i vs rhs_b / a_b with positive a's.
                        let lhs = self.rhs(i) * &self.rows[bi][col];
                        let rhs = self.rhs(bi) * &self.rows[i][col];
                        lhs < rhs || (lhs == rhs && self.basis[i] < self.basis[bi])
                    }
                };
                if better {
                    best = Some(i);
                }
            }
            match best {
                Some(r) => self.pivot(r, col),
                None => return Termination::Unbounded,
            }
        }
    }

    fn solution(&self, num_vars: usize) -> Vec<Rational> {
        let mut x = vec![rational::zero(); num_vars];
        for (i, &j) in self.basis.iter().enumerate() {
            if j < num_vars {
                x[j] = Rational::new(self.rhs(i).clone(), self.denom.clone());
            }
        }
        x
    }
}

/// A tableau whose basis is feasible for the original system, i.e. the state
/// after phase 1. Several objectives can be optimized from the same start.
#[derive(Debug, Clone)]
pub struct FeasibleTableau {
    num_vars: usize,
    rows: Vec<Vec<BigInt>>,
    basis: Vec<usize>,
    denom: BigInt,
}

impl FeasibleTableau {
    /// Phase 1: minimize the sum of one artificial variable per row.
    pub fn phase_one(sys: &FeasibilitySystem) -> Option<Self> {
        let n = sys.num_vars;
        let m = sys.rows.len();
        let mut rows = Vec::with_capacity(m);
        for (i, (row, rhs)) in sys.rows.iter().zip(&sys.rhs).enumerate() {
            let mut ints = integer_row(row.iter().chain(std::iter::once(rhs)));
            if rhs.is_negative() {
                for v in ints.iter_mut() {
                    *v = -&*v;
                }
            }
            let b = ints.pop().expect("rhs present");
            ints.extend((0..m).map(|k| if k == i { BigInt::one() } else { BigInt::zero() }));
            ints.push(b);
            rows.push(ints);
        }
        let mut cost = vec![BigInt::zero(); n + m];
        for (j, c) in cost.iter_mut().enumerate().take(n) {
            for row in &rows {
                *c -= &row[j];
            }
        }
        let mut t = Tableau { rows, cost, basis: (n..n + m).collect(), denom: BigInt::one() };
        // Phase 1 is bounded below by zero.
        let _ = t.run();
        if (0..t.rows.len()).any(|i| t.basis[i] >= n && t.rhs(i).is_positive()) {
            return None;
        }

        // Drive artificials out of the basis; rows where that is impossible
        // are linear combinations of the others.
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= n {
                match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        for row in t.rows.iter_mut() {
            let b = row.pop().expect("rhs present");
            row.truncate(n);
            row.push(b);
        }
        Some(FeasibleTableau { num_vars: n, rows: t.rows, basis: t.basis, denom: t.denom })
    }

    pub fn solution(&self) -> Vec<Rational> {
        let t = Tableau { rows: self.rows.clone(), cost: Vec::new(), basis: self.basis.clone(), denom: self.denom.clone() };
        t.solution(self.num_vars)
    }

    /// Phase 2 from this feasible basis.
    pub fn optimize(&self, objective: &[Rational], sense: Sense) -> LpOutcome {
        assert_eq!(objective.len(), self.num_vars, "objective length must match variable count");
        let mut c = integer_row(objective.iter());
        if sense == Sense::Maximize {
            for v in c.iter_mut() {
                *v = -&*v;
            }
        }
        let mut cost: Vec<BigInt> = c.iter().map(|cj| cj * &self.denom).collect();
        for (i, &bj) in self.basis.iter().enumerate() {
            if c[bj].is_zero() {
                continue;
            }
            for (cj, aij) in cost.iter_mut().zip(&self.rows[i]) {
                if !aij.is_zero() {
                    *cj -= &c[bj] * aij;
                }
            }
        }
        let mut t = Tableau { rows: self.rows.clone(), cost, basis: self.basis.clone(), denom: self.denom.clone() };
        match t.run() {
            Termination::Unbounded => LpOutcome::Unbounded,
            Termination::Optimal => {
                let solution = t.solution(self.num_vars);
                let value = rational::dot(objective, &solution);
                LpOutcome::Optimal { value, solution }
            }
        }
    }
}
