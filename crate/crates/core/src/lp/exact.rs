//! Exact-rational simplex for equality-form programs
//! (min c'x, Ax = b, x >= 0). The divided-difference constraints of the
//! minor-polynomial LP are too ill-conditioned for floating point once
//! a graph has twenty-odd distinct eigenvalues; over exact rationals
//! the same tiny tableau solves in milliseconds. Bland's rule
//! throughout, so termination needs no cycling heuristics.

use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub struct ExactStandardLp {
    /// Objective coefficients, minimized.
    pub objective: Vec<BigRational>,
    /// Equality rows.
    pub rows: Vec<Vec<BigRational>>,
    pub rhs: Vec<BigRational>,
}

pub enum ExactOutcome {
    Optimal(Vec<BigRational>),
    Infeasible,
    Unbounded,
}

pub fn solve_exact(lp: &ExactStandardLp) -> Result<ExactOutcome> {
    let n = lp.objective.len();
    let m = lp.rows.len();
    for row in &lp.rows {
        if row.len() != n {
            return Err(Error::InvalidParameter("exact LP row width mismatch".into()));
        }
    }
    let total = n + m; // structural + artificial
    let mut data: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, row) in lp.rows.iter().enumerate() {
        let mut r: Vec<BigRational> = Vec::with_capacity(total + 1);
        r.extend(row.iter().cloned());
        r.extend(std::iter::repeat(BigRational::zero()).take(m));
        r.push(lp.rhs[i].clone());
        if r[total].is_negative() {
            for v in r.iter_mut() {
                *v = -v.clone();
            }
        }
        r[n + i] = BigRational::one();
        data.push(r);
    }
    let mut basis: Vec<usize> = (n..total).collect();

    // phase 1 cost: sum of artificials, priced out
    let mut cost: Vec<BigRational> = vec![BigRational::zero(); total + 1];
    for j in n..total {
        cost[j] = BigRational::one();
    }
    for row in &data {
        for (c, v) in cost.iter_mut().zip(row.iter()) {
            *c -= v;
        }
    }
    iterate(&mut data, &mut cost, &mut basis, total, total)?;
    if (-&cost[total]).is_positive() {
        return Ok(ExactOutcome::Infeasible);
    }
    for i in 0..m {
        if basis[i] >= n {
            if let Some(col) = (0..n).find(|&j| !data[i][j].is_zero()) {
                pivot(&mut data, &mut cost, &mut basis, i, col);
            }
        }
    }

    // phase 2: restrict entering to structural columns
    let mut cost: Vec<BigRational> = vec![BigRational::zero(); total + 1];
    cost[..n].clone_from_slice(&lp.objective);
    for (i, row) in data.iter().enumerate() {
        let cb = cost[basis[i]].clone();
        if !cb.is_zero() {
            for (c, v) in cost.iter_mut().zip(row.iter()) {
                *c -= &cb * v;
            }
        }
    }
    if !iterate(&mut data, &mut cost, &mut basis, total, n)? {
        return Ok(ExactOutcome::Unbounded);
    }

    let mut values = vec![BigRational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            values[b] = data[i][total].clone();
        }
    }
    Ok(ExactOutcome::Optimal(values))
}

/// Bland's rule iterations; `enterable` caps the entering columns.
/// Returns false on an unbounded direction.
fn iterate(
    data: &mut [Vec<BigRational>],
    cost: &mut [BigRational],
    basis: &mut [usize],
    total: usize,
    enterable: usize,
) -> Result<bool> {
    let m = data.len();
    let max_iters = 500 * (m + enterable) + 5000;
    for _ in 0..max_iters {
        let Some(col) = (0..enterable).find(|&j| cost[j].is_negative()) else {
            return Ok(true);
        };
        let mut leaving: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if data[i][col].is_positive() {
                let ratio = &data[i][total] / &data[i][col];
                let better = match &leaving {
                    None => true,
                    Some((bi, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*bi]),
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = leaving else {
            return Ok(false);
        };
        pivot(data, cost, basis, row, col);
    }
    Err(Error::SolverFailure("exact simplex iteration cap exceeded".into()))
}

fn pivot(
    data: &mut [Vec<BigRational>],
    cost: &mut [BigRational],
    basis: &mut [usize],
    row: usize,
    col: usize,
) {
    let piv = data[row][col].clone();
    for v in data[row].iter_mut() {
        *v /= &piv;
    }
    for i in 0..data.len() {
        if i == row {
            continue;
        }
        let factor = data[i][col].clone();
        if factor.is_zero() {
            continue;
        }
        let src = data[row].clone();
        for (d, s) in data[i].iter_mut().zip(src.iter()) {
            *d -= &factor * s;
        }
    }
    let factor = cost[col].clone();
    if !factor.is_zero() {
        for (c, s) in cost.iter_mut().zip(data[row].iter()) {
            *c -= &factor * s;
        }
    }
    basis[row] = col;
}

/// Rational from an integer pair, for test fixtures.
#[cfg(test)]
pub fn rat(num: i64, den: i64) -> BigRational {
    use num_bigint::BigInt;
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
