//! t-minor polynomials for walk-regular graphs: minimize the trace of
//! p(A) over polynomials with p(theta_0) = 1 and p(theta_i) >= 0,
//! where "degree <= t" is encoded by vanishing divided differences.
//!
//! The divided-difference rows span many orders of magnitude once a
//! graph has twenty-odd distinct eigenvalues, far beyond what float
//! feasibility tolerances can carry, so the program is assembled and
//! solved in exact rational arithmetic throughout.

use super::exact::{solve_exact, ExactOutcome, ExactStandardLp};
use super::solver::{LpProblem, Relation, Sense};
use crate::error::{Error, Result};
use crate::poly::{ceil_eps, floor_eps, Polynomial};
use crate::spectrum::Spectrum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Solution of the minor-polynomial program: point values at the
/// distinct eigenvalues (leading 1 at theta_0), the resulting trace of
/// p(A), and the polynomial recovered by interpolation.
#[derive(Debug, Clone)]
pub struct MinorPolynomial {
    /// p(theta_0) = 1 first, then p(theta_1)..p(theta_d).
    pub point_values: Vec<f64>,
    /// sum_i m_i p(theta_i), including the principal term.
    pub trace: f64,
    pub polynomial: Polynomial,
}

/// Denominator granularity for irrational eigenvalues: exact dyadics of
/// this scale keep tableau entries small while perturbing nodes by at
/// most 2^-33, far below the floor margins of every bound in scope.
const DYADIC_BITS: i64 = 32;

/// Eigenvalues as exact rationals: integers snap, anything else becomes
/// a dyadic rounded to DYADIC_BITS.
fn exact_eigenvalues(spectrum: &Spectrum) -> Vec<BigRational> {
    let scale = BigInt::from(1i64 << DYADIC_BITS);
    (0..spectrum.distinct_count())
        .map(|i| {
            let v = spectrum.theta(i);
            if (v - v.round()).abs() < crate::FLOAT_DUST {
                BigRational::from_integer(BigInt::from(v.round() as i64))
            } else {
                let scaled = (v * (1i64 << DYADIC_BITS) as f64).round() as i64;
                BigRational::new(BigInt::from(scaled), scale.clone())
            }
        })
        .collect()
}

/// Linear forms of the divided differences f[theta_0..theta_m] in the
/// point values x_0..x_d, one coefficient vector per order m, computed
/// by the defining recursion
/// f[i..j] = (f[i+1..j] - f[i..j-1]) / (theta_j - theta_i).
fn divided_difference_forms(thetas: &[BigRational], up_to: usize) -> Vec<Vec<BigRational>> {
    let d = thetas.len() - 1;
    let width = d + 1;
    let mut current: Vec<Vec<BigRational>> = (0..=d)
        .map(|i| {
            let mut row = vec![BigRational::zero(); width];
            row[i] = BigRational::from_integer(BigInt::from(1));
            row
        })
        .collect();
    let mut out = Vec::new();
    for len in 1..=up_to {
        let mut next = Vec::with_capacity(d + 1 - len);
        for i in 0..=(d - len) {
            let j = i + len;
            let denom = &thetas[j] - &thetas[i];
            let row: Vec<BigRational> = current[i + 1]
                .iter()
                .zip(current[i].iter())
                .map(|(hi, lo)| (hi - lo) / &denom)
                .collect();
            next.push(row);
        }
        out.push(next[0].clone());
        current = next;
    }
    out
}

struct MinorProgram {
    /// Normalized constraint rows over x_1..x_d, one per order t+1..d.
    rows: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    objective: Vec<BigRational>,
}

fn build_program(spectrum: &Spectrum, t: u32) -> Result<MinorProgram> {
    let d = spectrum.d();
    if (t as usize) >= d {
        return Err(Error::Degenerate(format!(
            "minor polynomial needs t < d; got t={} with d={} (the power graph is complete)",
            t, d
        )));
    }
    let thetas = exact_eigenvalues(spectrum);
    let forms = divided_difference_forms(&thetas, d);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for m in (t as usize + 1)..=d {
        let form = &forms[m - 1];
        // normalize so every row has a unit-scale pivot candidate
        let scale = form
            .iter()
            .take(m + 1)
            .map(|c| c.abs())
            .max()
            .expect("nonempty form");
        if scale.is_zero() {
            continue;
        }
        let row: Vec<BigRational> = (1..=d)
            .map(|i| if i <= m { &form[i] / &scale } else { BigRational::zero() })
            .collect();
        rows.push(row);
        rhs.push(-&form[0] / &scale);
    }
    let objective: Vec<BigRational> = (1..=d)
        .map(|i| BigRational::from_integer(BigInt::from(spectrum.multiplicity(i))))
        .collect();
    Ok(MinorProgram { rows, rhs, objective })
}

/// The same program rendered as a float [`LpProblem`], for the CLI dump
/// and for feasibility checking of solutions.
pub fn minor_polynomial_problem(spectrum: &Spectrum, t: u32) -> Result<LpProblem> {
    let program = build_program(spectrum, t)?;
    let mut lp = LpProblem::new(
        Sense::Minimize,
        program.objective.iter().map(|c| c.to_f64().unwrap_or(0.0)).collect(),
    )
    .nonnegative();
    for (row, rhs) in program.rows.iter().zip(&program.rhs) {
        lp.push(
            row.iter().map(|c| c.to_f64().unwrap_or(0.0)).collect(),
            Relation::Eq,
            rhs.to_f64().unwrap_or(0.0),
        );
    }
    Ok(lp)
}

/// Newton interpolation of degree <= t through (theta_0, 1) and the
/// first t point values; the vanishing divided differences guarantee
/// the remaining points lie on the same polynomial.
fn interpolate(spectrum: &Spectrum, values: &[f64], t: usize) -> Polynomial {
    let xs: Vec<f64> = (0..=t).map(|i| spectrum.theta(i)).collect();
    let mut table: Vec<f64> = values[..=t].to_vec();
    let mut newton = vec![table[0]];
    for len in 1..=t {
        for i in 0..=(t - len) {
            table[i] = (table[i + 1] - table[i]) / (xs[i + len] - xs[i]);
        }
        newton.push(table[0]);
    }
    // expand sum_k newton[k] * prod_{j<k} (x - xs[j])
    let mut coeffs = vec![0.0; t + 1];
    let mut basis = vec![1.0];
    for (k, &c) in newton.iter().enumerate() {
        for (i, &b) in basis.iter().enumerate() {
            coeffs[i] += c * b;
        }
        if k < t {
            let mut next = vec![0.0; basis.len() + 1];
            for (i, &b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= xs[k] * b;
            }
            basis = next;
        }
    }
    Polynomial::new(coeffs)
}

pub fn minor_polynomial(spectrum: &Spectrum, t: u32) -> Result<MinorPolynomial> {
    let program = build_program(spectrum, t)?;
    let lp = ExactStandardLp {
        objective: program.objective.clone(),
        rows: program.rows,
        rhs: program.rhs,
    };
    let values = match solve_exact(&lp)? {
        ExactOutcome::Optimal(values) => values,
        ExactOutcome::Infeasible => {
            return Err(Error::SolverFailure("minor-polynomial LP infeasible".into()))
        }
        ExactOutcome::Unbounded => {
            return Err(Error::SolverFailure("minor-polynomial LP unbounded".into()))
        }
    };
    let d = spectrum.d();
    let mut point_values = Vec::with_capacity(d + 1);
    point_values.push(1.0);
    point_values.extend(values.iter().map(|v| v.to_f64().unwrap_or(0.0).max(0.0)));
    let trace: f64 = point_values
        .iter()
        .enumerate()
        .map(|(i, &x)| spectrum.multiplicity(i) as f64 * x)
        .sum();
    let polynomial = interpolate(spectrum, &point_values, t as usize);
    Ok(MinorPolynomial {
        point_values,
        trace,
        polynomial,
    })
}

/// Floor-enhanced chromatic bound from the minor polynomial:
/// ceil(n / floor(trace)). A zero floor cannot occur for a genuine
/// spectrum (the principal term alone contributes 1), but the collapse
/// is still reported as the whole vertex count for robustness.
pub fn lp_minor_bound(spectrum: &Spectrum, t: u32, vertex_count: u64) -> Result<u64> {
    let minor = minor_polynomial(spectrum, t)?;
    let fl = floor_eps(minor.trace);
    if fl < 1.0 {
        return Ok(vertex_count);
    }
    Ok(ceil_eps(vertex_count as f64 / fl) as u64)
}
