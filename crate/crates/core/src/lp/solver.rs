//! Dense two-phase simplex. Small and deterministic: Dantzig pivoting
//! with a Bland fallback against cycling, artificial variables in every
//! row, no factorization tricks. The programs in this crate have at
//! most a few hundred rows.

use crate::error::{Error, Result};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    fn symbol(&self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

/// Generic dense linear program over free or bounded variables.
#[derive(Debug, Clone)]
pub struct LpProblem {
    pub sense: Sense,
    pub objective: Vec<f64>,
    pub constraints: Vec<Constraint>,
    /// Per-variable lower bound; `None` leaves the variable free below.
    pub lower: Vec<Option<f64>>,
    /// Per-variable upper bound.
    pub upper: Vec<Option<f64>>,
}

impl LpProblem {
    pub fn new(sense: Sense, objective: Vec<f64>) -> Self {
        let nvars = objective.len();
        LpProblem {
            sense,
            objective,
            constraints: Vec::new(),
            lower: vec![None; nvars],
            upper: vec![None; nvars],
        }
    }

    /// All variables bounded below by zero.
    pub fn nonnegative(mut self) -> Self {
        for l in self.lower.iter_mut() {
            *l = Some(0.0);
        }
        self
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn push(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) {
        assert_eq!(coeffs.len(), self.num_vars(), "constraint width mismatch");
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    /// Plain-text rows/columns listing, for cross-checking against
    /// external solvers.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "sense: {}",
            match self.sense {
                Sense::Minimize => "min",
                Sense::Maximize => "max",
            }
        )
        .unwrap();
        writeln!(out, "vars: {}", self.num_vars()).unwrap();
        write!(out, "objective:").unwrap();
        for c in &self.objective {
            write!(out, " {:.12e}", c).unwrap();
        }
        writeln!(out).unwrap();
        for (j, (l, u)) in self.lower.iter().zip(&self.upper).enumerate() {
            if l.is_some() || u.is_some() {
                writeln!(
                    out,
                    "bound x{}: [{}, {}]",
                    j,
                    l.map_or("-inf".into(), |v| format!("{:.12e}", v)),
                    u.map_or("+inf".into(), |v| format!("{:.12e}", v)),
                )
                .unwrap();
            }
        }
        for (i, c) in self.constraints.iter().enumerate() {
            write!(out, "row {}:", i).unwrap();
            for a in &c.coeffs {
                write!(out, " {:.12e}", a).unwrap();
            }
            writeln!(out, " {} {:.12e}", c.relation.symbol(), c.rhs).unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Variable assignment in the original problem's variables; empty
    /// unless optimal.
    pub values: Vec<f64>,
    pub objective: f64,
}

const PIVOT_EPS: f64 = 1e-9;
const FEAS_EPS: f64 = 1e-7;

/// How each original variable maps into the standard-form columns.
struct VarMap {
    pos: usize,
    neg: Option<usize>,
    shift: f64,
}

struct Tableau {
    rows: usize,
    cols: usize, // structural + slack + artificial, excluding rhs
    data: Vec<Vec<f64>>,
    cost: Vec<f64>, // reduced-cost row, cost[cols] holds -objective
    basis: Vec<usize>,
    artificial_start: usize,
}

impl Tableau {
    fn enterable(&self, phase2: bool, j: usize) -> bool {
        !(phase2 && j >= self.artificial_start)
    }

    /// One simplex run on the current cost row. Returns false on
    /// unboundedness.
    fn iterate(&mut self, phase2: bool) -> Result<bool> {
        let bland_after = 10 * (self.rows + self.cols);
        let max_iters = 200 * (self.rows + self.cols) + 2000;
        for iter in 0..max_iters {
            let use_bland = iter >= bland_after;
            // entering column
            let mut entering = None;
            let mut best = -PIVOT_EPS;
            for j in 0..self.cols {
                if !self.enterable(phase2, j) {
                    continue;
                }
                let c = self.cost[j];
                if use_bland {
                    if c < -PIVOT_EPS {
                        entering = Some(j);
                        break;
                    }
                } else if c < best {
                    best = c;
                    entering = Some(j);
                }
            }
            let Some(col) = entering else {
                return Ok(true); // optimal
            };
            // ratio test, ties to the smallest row index
            let mut leaving = None;
            let mut best_ratio = f64::INFINITY;
            for i in 0..self.rows {
                let a = self.data[i][col];
                if a > PIVOT_EPS {
                    let ratio = self.data[i][self.cols] / a;
                    if ratio < best_ratio - PIVOT_EPS {
                        best_ratio = ratio;
                        leaving = Some(i);
                    }
                }
            }
            let Some(row) = leaving else {
                return Ok(false); // unbounded direction
            };
            self.pivot(row, col);
        }
        Err(Error::SolverFailure("simplex iteration cap exceeded".into()))
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.data[row][col];
        for v in self.data[row].iter_mut() {
            *v /= piv;
        }
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            let factor = self.data[i][col];
            if factor != 0.0 {
                let (src, dst) = if i < row {
                    let (a, b) = self.data.split_at_mut(row);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = self.data.split_at_mut(i);
                    (&a[row], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= factor * s;
                }
            }
        }
        let factor = self.cost[col];
        if factor != 0.0 {
            for (c, s) in self.cost.iter_mut().zip(self.data[row].iter()) {
                *c -= factor * s;
            }
        }
        self.basis[row] = col;
    }
}

/// Solves to optimality or proves infeasibility/unboundedness.
/// Deterministic given the input order.
pub fn solve_lp(problem: &LpProblem) -> Result<LpSolution> {
    let nvars = problem.num_vars();
    if nvars == 0 {
        return Err(Error::InvalidParameter("LP needs at least one variable".into()));
    }
    for c in &problem.constraints {
        if c.coeffs.len() != nvars {
            return Err(Error::InvalidParameter("constraint width mismatch".into()));
        }
    }

    // map variables onto nonnegative columns: shifted when bounded
    // below, split into a difference otherwise
    let mut maps: Vec<VarMap> = Vec::with_capacity(nvars);
    let mut ncols = 0;
    for j in 0..nvars {
        match problem.lower[j] {
            Some(l) => {
                maps.push(VarMap { pos: ncols, neg: None, shift: l });
                ncols += 1;
            }
            None => {
                maps.push(VarMap { pos: ncols, neg: Some(ncols + 1), shift: 0.0 });
                ncols += 2;
            }
        }
    }

    // upper bounds become explicit rows over the original variables
    let mut rows: Vec<(Vec<f64>, Relation, f64)> = Vec::new();
    for c in &problem.constraints {
        rows.push((c.coeffs.clone(), c.relation, c.rhs));
    }
    for j in 0..nvars {
        if let Some(u) = problem.upper[j] {
            let mut coeffs = vec![0.0; nvars];
            coeffs[j] = 1.0;
            rows.push((coeffs, Relation::Le, u));
        }
    }

    let m = rows.len();
    let slack_count = rows
        .iter()
        .filter(|(_, rel, _)| !matches!(rel, Relation::Eq))
        .count();
    let structural = ncols;
    let total_cols = structural + slack_count + m; // + artificials

    let mut data: Vec<Vec<f64>> = Vec::with_capacity(m);
    let mut slack_idx = structural;
    for (coeffs, rel, rhs) in &rows {
        let mut row = vec![0.0; total_cols + 1];
        for j in 0..nvars {
            let a = coeffs[j];
            if a == 0.0 {
                continue;
            }
            row[maps[j].pos] += a;
            if let Some(neg) = maps[j].neg {
                row[neg] -= a;
            }
        }
        // shift the rhs by the lower bounds
        let mut b = *rhs;
        for j in 0..nvars {
            b -= coeffs[j] * maps[j].shift;
        }
        match rel {
            Relation::Le => {
                row[slack_idx] = 1.0;
                slack_idx += 1;
            }
            Relation::Ge => {
                row[slack_idx] = -1.0;
                slack_idx += 1;
            }
            Relation::Eq => {}
        }
        row[total_cols] = b;
        if b < 0.0 {
            for v in row.iter_mut() {
                *v = -*v;
            }
        }
        data.push(row);
    }
    let artificial_start = structural + slack_count;
    let mut basis = Vec::with_capacity(m);
    for (i, row) in data.iter_mut().enumerate() {
        row[artificial_start + i] = 1.0;
        basis.push(artificial_start + i);
    }

    // phase 1: price out the artificial basis
    let mut cost = vec![0.0; total_cols + 1];
    for j in artificial_start..total_cols {
        cost[j] = 1.0;
    }
    for row in &data {
        for (c, v) in cost.iter_mut().zip(row.iter()) {
            *c -= v;
        }
    }
    let mut tab = Tableau {
        rows: m,
        cols: total_cols,
        data,
        cost,
        basis,
        artificial_start,
    };
    if m > 0 {
        if !tab.iterate(false)? {
            return Err(Error::SolverFailure("phase-1 objective unbounded".into()));
        }
        let infeas = -tab.cost[tab.cols];
        if infeas > FEAS_EPS {
            return Ok(LpSolution {
                status: LpStatus::Infeasible,
                values: vec![],
                objective: 0.0,
            });
        }
        // drive leftover artificials out of the basis where possible
        for i in 0..tab.rows {
            if tab.basis[i] >= tab.artificial_start {
                if let Some(col) = (0..tab.artificial_start)
                    .find(|&j| tab.data[i][j].abs() > PIVOT_EPS)
                {
                    tab.pivot(i, col);
                }
                // otherwise the row is redundant; its artificial stays
                // basic at zero and can never re-enter
            }
        }
    }

    // phase 2: original objective as a minimization
    let sign = match problem.sense {
        Sense::Minimize => 1.0,
        Sense::Maximize => -1.0,
    };
    let mut cost = vec![0.0; total_cols + 1];
    for j in 0..nvars {
        let c = sign * problem.objective[j];
        cost[maps[j].pos] += c;
        if let Some(neg) = maps[j].neg {
            cost[neg] -= c;
        }
        // constant offset from the shifts goes straight to the corner
        cost[total_cols] -= c * maps[j].shift;
    }
    // price out the current basis
    for i in 0..tab.rows {
        let cb = cost[tab.basis[i]];
        if cb != 0.0 {
            let row = tab.data[i].clone();
            for (c, v) in cost.iter_mut().zip(row.iter()) {
                *c -= cb * v;
            }
        }
    }
    tab.cost = cost;
    if !tab.iterate(true)? {
        return Ok(LpSolution {
            status: LpStatus::Unbounded,
            values: vec![],
            objective: 0.0,
        });
    }

    // read out the solution
    let mut col_values = vec![0.0; tab.cols];
    for i in 0..tab.rows {
        col_values[tab.basis[i]] = tab.data[i][tab.cols];
    }
    let mut values = Vec::with_capacity(nvars);
    for map in &maps {
        let mut v = map.shift + col_values[map.pos];
        if let Some(neg) = map.neg {
            v -= col_values[neg];
        }
        values.push(v);
    }
    let objective: f64 = values
        .iter()
        .zip(&problem.objective)
        .map(|(v, c)| v * c)
        .sum();
    Ok(LpSolution {
        status: LpStatus::Optimal,
        values,
        objective,
    })
}

/// Checks an optimal assignment against every constraint and bound;
/// used by tests and debug assertions.
pub fn solution_is_feasible(problem: &LpProblem, values: &[f64]) -> bool {
    if values.len() != problem.num_vars() {
        return false;
    }
    for c in &problem.constraints {
        let lhs: f64 = c.coeffs.iter().zip(values).map(|(a, v)| a * v).sum();
        let ok = match c.relation {
            Relation::Le => lhs <= c.rhs + FEAS_EPS,
            Relation::Ge => lhs >= c.rhs - FEAS_EPS,
            Relation::Eq => (lhs - c.rhs).abs() <= FEAS_EPS,
        };
        if !ok {
            return false;
        }
    }
    for (j, v) in values.iter().enumerate() {
        if let Some(l) = problem.lower[j] {
            if *v < l - FEAS_EPS {
                return false;
            }
        }
        if let Some(u) = problem.upper[j] {
            if *v > u + FEAS_EPS {
                return false;
            }
        }
    }
    true
}
