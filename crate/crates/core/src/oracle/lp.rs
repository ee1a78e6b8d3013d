//! Exact feasibility for small linear systems over free variables.
//!
//! Phase one of the simplex method on `BigRational` entries, with Bland's
//! rule so degenerate pivots cannot cycle.

use num_traits::{One, Signed, Zero};

use crate::geometry::Rational;

/// A row `a · x (= or >=) b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpRow {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

/// Feasibility problem with free variables, equality rows and `>=` rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem {
    variables: usize,
    equalities: Vec<LpRow>,
    inequalities: Vec<LpRow>,
}

impl LpProblem {
    pub fn new(variables: usize) -> Self {
        LpProblem {
            variables,
            equalities: Vec::new(),
            inequalities: Vec::new(),
        }
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn equalities(&self) -> &[LpRow] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[LpRow] {
        &self.inequalities
    }

    /// Adds `coeffs · x = rhs`.
    pub fn add_equality(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        assert_eq!(coeffs.len(), self.variables, "row width");
        self.equalities.push(LpRow { coeffs, rhs });
    }

    /// Adds `coeffs · x >= rhs`.
    pub fn add_inequality(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        assert_eq!(coeffs.len(), self.variables, "row width");
        self.inequalities.push(LpRow { coeffs, rhs });
    }

    /// Whether `x` satisfies every row exactly.
    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        let eval = |row: &LpRow| -> Rational {
            row.coeffs
                .iter()
                .zip(x)
                .fold(Rational::zero(), |acc, (a, v)| acc + a * v)
        };
        x.len() == self.variables
            && self.equalities.iter().all(|r| eval(r) == r.rhs)
            && self.inequalities.iter().all(|r| eval(r) >= r.rhs)
    }

    /// A feasible point, or `None` when the system is infeasible.
    pub fn solve(&self) -> Option<Vec<Rational>> {
        Tableau::build(self).run()
    }
}

/// Standard-form tableau: each free variable `x_j` is split as
/// `x_j+ - x_j-`, each `>=` row gets a surplus column, and every row gets an
/// artificial column that starts in the basis.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    /// Reduced costs of the phase-one objective (sum of artificials).
    cost: Vec<Rational>,
    basis: Vec<usize>,
    structural: usize,
    variables: usize,
}

impl Tableau {
    fn build(p: &LpProblem) -> Self {
        let n = p.variables;
        let surplus = p.inequalities.len();
        let m = p.equalities.len() + surplus;
        let structural = 2 * n + surplus;
        let width = structural + m;
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let all = p
            .equalities
            .iter()
            .map(|r| (r, None))
            .chain(p.inequalities.iter().enumerate().map(|(k, r)| (r, Some(k))));
        for (i, (row, slack)) in all.enumerate() {
            let mut t = vec![Rational::zero(); width];
            for (j, a) in row.coeffs.iter().enumerate() {
                t[2 * j] = a.clone();
                t[2 * j + 1] = -a;
            }
            if let Some(k) = slack {
                t[2 * n + k] = -Rational::one();
            }
            let mut b = row.rhs.clone();
            if b.is_negative() {
                for v in &mut t {
                    *v = -&*v;
                }
                b = -b;
            }
            t[structural + i] = Rational::one();
            rows.push(t);
            rhs.push(b);
        }
        let mut cost = vec![Rational::zero(); width];
        for row in &rows {
            for (c, a) in cost.iter_mut().zip(row).take(structural) {
                *c -= a;
            }
        }
        Tableau {
            rows,
            rhs,
            cost,
            basis: (structural..width).collect(),
            structural,
            variables: n,
        }
    }

    fn run(mut self) -> Option<Vec<Rational>> {
        // Bland: lowest-index improving column; artificials never re-enter.
        while let Some(col) = (0..self.structural).find(|&j| self.cost[j].is_negative()) {
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[col].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &row[col];
                let better = match &best {
                    None => true,
                    Some((b, r)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*b]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            // The phase-one objective is bounded below by zero, so some row
            // always limits the step.
            let (pivot_row, _) = best.expect("phase one is bounded");
            self.pivot(pivot_row, col);
        }
        let infeasible = self
            .basis
            .iter()
            .zip(&self.rhs)
            .any(|(&b, v)| b >= self.structural && !v.is_zero());
        if infeasible {
            return None;
        }
        let mut values = vec![Rational::zero(); self.structural];
        for (&b, v) in self.basis.iter().zip(&self.rhs) {
            if b < self.structural {
                values[b] = v.clone();
            }
        }
        Some(
            (0..self.variables)
                .map(|j| &values[2 * j] - &values[2 * j + 1])
                .collect(),
        )
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for v in &mut self.rows[r] {
                if !v.is_zero() {
                    *v /= &p;
                }
            }
            self.rhs[r] /= &p;
        }
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        let nonzero: Vec<usize> = (0..pivot_row.len())
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for &j in &nonzero {
                let delta = &f * &pivot_row[j];
                self.rows[i][j] -= delta;
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for &j in &nonzero {
                let delta = &f * &pivot_row[j];
                self.cost[j] -= delta;
            }
        }
        self.basis[r] = c;
    }
}
