//! Exact two-phase primal simplex over the rationals.
//!
//! Variables are free; the program is
//! `max/min <c, x>` subject to `A x <= b` and `E x = f`.
//! Bland's rule is used for both the entering and leaving variable, so the
//! method terminates on degenerate problems.

use num::{Signed, Zero};

use super::poly::Constraint;
use super::rat::{dot, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rat, witness: Vec<Rat> },
    /// `feasible + t * ray` stays feasible for all `t >= 0` and improves the
    /// objective without bound.
    Unbounded { feasible: Vec<Rat>, ray: Vec<Rat> },
    Infeasible,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rat> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible)
    }
}

/// Raw constraint data borrowed from a polyhedron.
pub struct LpProblem<'a> {
    pub dim: usize,
    pub ineqs: &'a [Constraint],
    pub eqs: &'a [Constraint],
}

struct Tableau {
    rows: Vec<Vec<Rat>>,
    obj: Vec<Rat>,
    basis: Vec<usize>,
    ncols: usize,
}

enum Pivoted {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rat {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !num::One::is_one(&p) {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v /= &p;
                }
            }
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (v, pv) in self.obj.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs simplex iterations on the current objective row, restricted to
    /// columns `< allowed`.
    fn run(&mut self, allowed: usize) -> Pivoted {
        loop {
            let entering = (0..allowed).find(|&j| self.obj[j].is_negative());
            let Some(c) = entering else {
                return Pivoted::Optimal;
            };
            let mut best: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return Pivoted::Unbounded(c),
            }
        }
    }

    fn set_objective(&mut self, costs: &[Rat]) {
        // obj_j = -c_j, then eliminate basic columns
        let mut obj: Vec<Rat> = (0..=self.ncols)
            .map(|j| if j < costs.len() { -&costs[j] } else { Rat::zero() })
            .collect();
        for (i, &b) in self.basis.iter().enumerate() {
            if !obj[b].is_zero() {
                let f = obj[b].clone();
                for (v, rv) in obj.iter_mut().zip(&self.rows[i]) {
                    if !rv.is_zero() {
                        *v -= &f * rv;
                    }
                }
            }
        }
        self.obj = obj;
    }

    fn values(&self) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); self.ncols];
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = self.rhs(i).clone();
        }
        x
    }
}

/// Solves the program exactly.
pub fn solve(problem: &LpProblem<'_>, objective: &[Rat], sense: Sense) -> LpOutcome {
    let n = problem.dim;
    let m_in = problem.ineqs.len();
    let m_eq = problem.eqs.len();
    let m = m_in + m_eq;
    // columns: x+ (n), x- (n), slacks (m_in), artificials (appended)
    let base_cols = 2 * n + m_in;
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut needs_art = Vec::with_capacity(m);
    for (i, Constraint { normal: a, offset: b }) in problem.ineqs.iter().enumerate() {
        let mut row = vec![Rat::zero(); base_cols];
        for j in 0..n {
            row[j] = a[j].clone();
            row[n + j] = -&a[j];
        }
        row[2 * n + i] = Rat::from_integer(1.into());
        let mut rhs = b.clone();
        let negate = rhs.is_negative();
        if negate {
            row.iter_mut().for_each(|v| *v = -&*v);
            rhs = -rhs;
        }
        row.push(rhs);
        rows.push(row);
        needs_art.push(negate);
    }
    for Constraint { normal: a, offset: b } in problem.eqs {
        let mut row = vec![Rat::zero(); base_cols];
        for j in 0..n {
            row[j] = a[j].clone();
            row[n + j] = -&a[j];
        }
        let mut rhs = b.clone();
        if rhs.is_negative() {
            row.iter_mut().for_each(|v| *v = -&*v);
            rhs = -rhs;
        }
        row.push(rhs);
        rows.push(row);
        needs_art.push(true);
    }
    let n_art = needs_art.iter().filter(|&&x| x).count();
    let ncols = base_cols + n_art;
    let mut basis = Vec::with_capacity(m);
    let mut next_art = base_cols;
    for (i, row) in rows.iter_mut().enumerate() {
        let rhs = row.pop().unwrap();
        row.resize(ncols, Rat::zero());
        if needs_art[i] {
            row[next_art] = Rat::from_integer(1.into());
            basis.push(next_art);
            next_art += 1;
        } else {
            basis.push(2 * n + i);
        }
        row.push(rhs);
    }
    let mut t = Tableau {
        rows,
        obj: Vec::new(),
        basis,
        ncols,
    };

    if n_art > 0 {
        let mut costs = vec![Rat::zero(); ncols];
        for c in costs.iter_mut().skip(base_cols) {
            *c = Rat::from_integer((-1).into());
        }
        t.set_objective(&costs);
        // phase one is bounded above by zero
        let _ = t.run(ncols);
        if t.obj[ncols].is_negative() {
            return LpOutcome::Infeasible;
        }
        // drive artificials out of the basis
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= base_cols {
                match (0..base_cols).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => {
                        t.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
        for row in t.rows.iter_mut() {
            let rhs = row.pop().unwrap();
            row.truncate(base_cols);
            row.push(rhs);
        }
        t.ncols = base_cols;
    }

    let sign = match sense {
        Sense::Max => Rat::from_integer(1.into()),
        Sense::Min => Rat::from_integer((-1).into()),
    };
    let mut costs = vec![Rat::zero(); t.ncols];
    for j in 0..n {
        costs[j] = &objective[j] * &sign;
        costs[n + j] = -&costs[j];
    }
    t.set_objective(&costs);
    let outcome = t.run(t.ncols);
    let vals = t.values();
    let x: Vec<Rat> = (0..n).map(|j| &vals[j] - &vals[n + j]).collect();
    match outcome {
        Pivoted::Optimal => {
            let value = dot(objective, &x);
            LpOutcome::Optimal { value, witness: x }
        }
        Pivoted::Unbounded(c) => {
            let mut d = vec![Rat::zero(); t.ncols];
            d[c] = Rat::from_integer(1.into());
            for (i, &b) in t.basis.iter().enumerate() {
                d[b] = -&t.rows[i][c];
            }
            let ray: Vec<Rat> = (0..n).map(|j| &d[j] - &d[n + j]).collect();
            LpOutcome::Unbounded { feasible: x, ray }
        }
    }
}
