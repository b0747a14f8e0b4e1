//! Exact feasibility for small linear systems over `Q`.
//!
//! Phase-I simplex on a dense tableau with Bland's rule, so it terminates
//! without cycling. Sizes here are tens of variables and constraints.

use num_traits::{One, Signed, Zero};

use crate::series::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Variables are either sign-free or constrained to be nonnegative.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    nonneg: Vec<bool>,
    constraints: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(nonneg: Vec<bool>) -> Self {
        Self { nonneg, constraints: Vec::new() }
    }

    pub fn free(nvars: usize) -> Self {
        Self::new(vec![false; nvars])
    }

    pub fn nonnegative(nvars: usize) -> Self {
        Self::new(vec![true; nvars])
    }

    pub fn nvars(&self) -> usize {
        self.nonneg.len()
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.nvars(), "constraint arity");
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    /// A feasible point, or `None` if the system is infeasible.
    pub fn solve(&self) -> Option<Vec<Rational>> {
        // column layout: one column per nonneg var, two per free var, one
        // slack per inequality, one artificial per row
        let mut col_of = Vec::with_capacity(self.nvars());
        let mut ncols = 0;
        for &nn in &self.nonneg {
            col_of.push(ncols);
            ncols += if nn { 1 } else { 2 };
        }
        let structural = ncols;
        let nslack = self.constraints.iter().filter(|c| c.relation != Relation::Eq).count();
        let m = self.constraints.len();
        let width = structural + nslack + m;

        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
        let mut rhs: Vec<Rational> = Vec::with_capacity(m);
        let mut slack = structural;
        for (i, c) in self.constraints.iter().enumerate() {
            let mut row = vec![Rational::zero(); width];
            for (v, a) in c.coeffs.iter().enumerate() {
                row[col_of[v]] = a.clone();
                if !self.nonneg[v] {
                    row[col_of[v] + 1] = -a.clone();
                }
            }
            match c.relation {
                Relation::Le => {
                    row[slack] = Rational::one();
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -Rational::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            let mut b = c.rhs.clone();
            if b.is_negative() {
                row.iter_mut().for_each(|x| *x = -x.clone());
                b = -b;
            }
            row[structural + nslack + i] = Rational::one();
            rows.push(row);
            rhs.push(b);
        }

        let art0 = structural + nslack;
        let mut basis: Vec<usize> = (0..m).map(|i| art0 + i).collect();
        // objective: minimize the sum of artificials; reduced costs
        // `cost[j] = -sum_i rows[i][j]` over non-artificial columns
        let mut cost = vec![Rational::zero(); width];
        let mut value = Rational::zero();
        for (row, b) in rows.iter().zip(&rhs) {
            for j in 0..art0 {
                cost[j] -= &row[j];
            }
            value -= b;
        }

        while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..m {
                if rows[i][enter].is_positive() {
                    let ratio = &rhs[i] / &rows[i][enter];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((pr, _)) = leave else {
                // unbounded below cannot happen for a sum of nonnegatives
                unreachable!("phase-I objective is bounded below by zero");
            };
            let piv = rows[pr][enter].clone();
            rows[pr].iter_mut().for_each(|x| *x /= &piv);
            rhs[pr] /= &piv;
            let prow = rows[pr].clone();
            let pb = rhs[pr].clone();
            for i in 0..m {
                if i != pr && !rows[i][enter].is_zero() {
                    let f = rows[i][enter].clone();
                    for j in 0..width {
                        if !prow[j].is_zero() {
                            let d = &f * &prow[j];
                            rows[i][j] -= d;
                        }
                    }
                    rhs[i] -= &f * &pb;
                }
            }
            if !cost[enter].is_zero() {
                let f = cost[enter].clone();
                for j in 0..width {
                    if !prow[j].is_zero() {
                        cost[j] -= &f * &prow[j];
                    }
                }
                value -= &f * &pb;
            }
            basis[pr] = enter;
        }

        if !value.is_zero() {
            return None;
        }
        let mut x = vec![Rational::zero(); width];
        for (i, &b) in basis.iter().enumerate() {
            x[b] = rhs[i].clone();
        }
        Some(
            (0..self.nvars())
                .map(|v| {
                    let c = col_of[v];
                    if self.nonneg[v] {
                        x[c].clone()
                    } else {
                        &x[c] - &x[c + 1]
                    }
                })
                .collect(),
        )
    }

    pub fn is_feasible(&self) -> bool {
        self.solve().is_some()
    }

    /// Checks a candidate point exactly against every constraint.
    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.nvars()
            && self.nonneg.iter().zip(x).all(|(&nn, v)| !nn || !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs: Rational = c.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }
}

/// Whether `target` is a nonnegative combination of `generators`.
pub fn in_cone(target: &[Rational], generators: &[Vec<Rational>]) -> bool {
    let mut sys = LinearSystem::nonnegative(generators.len());
    for (d, t) in target.iter().enumerate() {
        sys.add(generators.iter().map(|g| g[d].clone()).collect(), Relation::Eq, t.clone());
    }
    sys.is_feasible()
}
