//! Dense two-phase simplex over exact rationals.
//!
//! Pivoting follows Bland's rule: the entering column is the lowest-index
//! column with negative reduced cost, and ratio-test ties are broken by
//! the lowest basic variable index. This terminates on every input and
//! makes the returned witness a deterministic function of the input.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{int_rat, IntVector, RatVector, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `<a, x> >= b`
    Ge,
    /// `<a, x> <= b`
    Le,
    /// `<a, x> = b`
    Eq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpResult {
    pub status: LpStatus,
    /// Present iff `status == Optimal`.
    pub optimum: Option<Rational>,
    /// Optimal point, present iff `status == Optimal`.
    pub witness: Option<RatVector>,
}

impl LpResult {
    fn without_solution(status: LpStatus) -> Self {
        LpResult { status, optimum: None, witness: None }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }

    pub fn is_feasible(&self) -> bool {
        self.status != LpStatus::Infeasible
    }
}

/// A linear program over free or nonnegative rational variables.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    num_vars: usize,
    nonnegative: Vec<bool>,
    rows: Vec<(RatVector, Relation, Rational)>,
    objective: RatVector,
    sense: Sense,
}

impl LinearProgram {
    /// A program with `num_vars` free variables, no constraints and a zero
    /// objective.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            nonnegative: vec![false; num_vars],
            rows: Vec::new(),
            objective: vec![Rational::zero(); num_vars],
            sense: Sense::Maximize,
        }
    }

    pub fn all_nonnegative(mut self) -> Self {
        self.nonnegative = vec![true; self.num_vars];
        self
    }

    pub fn set_nonnegative(&mut self, var: usize) {
        self.nonnegative[var] = true;
    }

    pub fn add_constraint(&mut self, coeffs: RatVector, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.num_vars, "constraint length mismatch");
        self.rows.push((coeffs, relation, rhs));
    }

    pub fn add_int_constraint(&mut self, coeffs: &[BigInt], relation: Relation, rhs: Rational) {
        self.add_constraint(coeffs.iter().map(int_rat).collect(), relation, rhs);
    }

    pub fn set_objective(&mut self, objective: RatVector, sense: Sense) {
        assert_eq!(objective.len(), self.num_vars, "objective length mismatch");
        self.objective = objective;
        self.sense = sense;
    }

    pub fn solve(&self) -> LpResult {
        Tableau::build(self).run(self)
    }
}

/// Exact optimum of `objective` over `{x : <a, x> >= b for (a, b) in constraints}`.
pub fn solve_lp(constraints: &[(IntVector, Rational)], objective: &[Rational], sense: Sense) -> LpResult {
    let n = objective.len();
    let mut lp = LinearProgram::new(n);
    for (a, b) in constraints {
        assert_eq!(a.len(), n, "all constraint vectors must have the objective's length");
        lp.add_int_constraint(a, Relation::Ge, b.clone());
    }
    lp.set_objective(objective.to_vec(), sense);
    lp.solve()
}

struct Tableau {
    rows: Vec<RatVector>,
    basis: Vec<usize>,
    /// Column index range `[artificial_start, width)` holds the artificials.
    artificial_start: usize,
    width: usize,
    /// For each original variable: (plus column, optional minus column).
    var_columns: Vec<(usize, Option<usize>)>,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let mut var_columns = Vec::with_capacity(lp.num_vars);
        let mut col = 0;
        for &nonneg in &lp.nonnegative {
            if nonneg {
                var_columns.push((col, None));
                col += 1;
            } else {
                var_columns.push((col, Some(col + 1)));
                col += 2;
            }
        }
        let slack_start = col;
        let num_slacks = lp.rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let artificial_start = slack_start + num_slacks;
        let m = lp.rows.len();
        let width = artificial_start + m;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack = slack_start;
        for (i, (coeffs, relation, rhs)) in lp.rows.iter().enumerate() {
            let mut row = vec![Rational::zero(); width + 1];
            for (j, c) in coeffs.iter().enumerate() {
                let (plus, minus) = var_columns[j];
                row[plus] = c.clone();
                if let Some(minus) = minus {
                    row[minus] = -c;
                }
            }
            match relation {
                Relation::Ge => {
                    row[slack] = Rational::from_integer((-1).into());
                    slack += 1;
                }
                Relation::Le => {
                    row[slack] = Rational::from_integer(1.into());
                    slack += 1;
                }
                Relation::Eq => {}
            }
            row[width] = rhs.clone();
            if rhs.is_negative() {
                for x in row.iter_mut() {
                    *x = -&*x;
                }
            }
            row[artificial_start + i] = Rational::from_integer(1.into());
            rows.push(row);
            basis.push(artificial_start + i);
        }
        Tableau { rows, basis, artificial_start, width, var_columns }
    }

    fn run(mut self, lp: &LinearProgram) -> LpResult {
        // Phase one: minimize the sum of artificials.
        let mut cost = vec![Rational::zero(); self.width];
        for c in cost.iter_mut().skip(self.artificial_start) {
            *c = Rational::from_integer(1.into());
        }
        let phase_one = self.optimize(&cost, self.width);
        debug_assert!(phase_one, "phase one is bounded below by zero");
        let infeasibility: Rational = self
            .basis
            .iter()
            .zip(&self.rows)
            .filter(|(b, _)| **b >= self.artificial_start)
            .map(|(_, row)| row[self.width].clone())
            .sum();
        if infeasibility.is_positive() {
            return LpResult::without_solution(LpStatus::Infeasible);
        }
        self.evict_artificials();

        // Phase two over the structural and slack columns only.
        let mut cost = vec![Rational::zero(); self.width];
        for (j, c) in lp.objective.iter().enumerate() {
            let c = match lp.sense {
                Sense::Minimize => c.clone(),
                Sense::Maximize => -c,
            };
            let (plus, minus) = self.var_columns[j];
            if let Some(minus) = minus {
                cost[minus] = -&c;
            }
            cost[plus] = c;
        }
        if !self.optimize(&cost, self.artificial_start) {
            return LpResult::without_solution(LpStatus::Unbounded);
        }

        let mut column_values = vec![Rational::zero(); self.width];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            column_values[b] = row[self.width].clone();
        }
        let witness: RatVector = self
            .var_columns
            .iter()
            .map(|&(plus, minus)| match minus {
                Some(minus) => &column_values[plus] - &column_values[minus],
                None => column_values[plus].clone(),
            })
            .collect();
        let optimum = lp.objective.iter().zip(&witness).map(|(c, x)| c * x).sum();
        LpResult { status: LpStatus::Optimal, optimum: Some(optimum), witness: Some(witness) }
    }

    /// Minimizes `cost` using columns `< allowed`. Returns false if unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> bool {
        loop {
            let reduced = self.reduced_costs(cost);
            let Some(entering) = (0..allowed).find(|&j| reduced[j].is_negative()) else {
                return true;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[entering].is_positive() {
                    continue;
                }
                let ratio = &row[self.width] / &row[entering];
                let better = match &leaving {
                    None => true,
                    Some((li, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((pivot_row, _)) = leaving else {
                return false;
            };
            self.pivot(pivot_row, entering);
        }
    }

    fn reduced_costs(&self, cost: &[Rational]) -> RatVector {
        let mut reduced: RatVector = cost.to_vec();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (r, x) in reduced.iter_mut().zip(row.iter()) {
                if !x.is_zero() {
                    *r -= cb * x;
                }
            }
        }
        reduced
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Pivots zero-level artificials out of the basis, dropping rows that
    /// turn out to be linearly dependent.
    fn evict_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < self.artificial_start {
                i += 1;
                continue;
            }
            match (0..self.artificial_start).find(|&j| !self.rows[i][j].is_zero()) {
                Some(j) => {
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }
}
