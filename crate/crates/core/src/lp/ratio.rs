//! Per-(vertex, eigenvalue) linear programs that search for the best
//! polynomial in the general Ratio-type bound. One subproblem pins
//! W(p) at a chosen vertex and lambda(p) at a chosen eigenvalue; the
//! best of the d*n optima is the best bound the theorem can give.

use super::solver::{solve_lp, LpProblem, LpStatus, Relation, Sense};
use crate::bounds::{eval_ratio_general, RatioCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Polynomial;
use crate::spectrum::{numeric_spectrum, walk_diagonal, Spectrum, WalkDiagonal, DEFAULT_NUMERIC_TOL};

/// Strict inequalities p(theta_0) > p(theta_j) are not expressible in
/// an LP; they are relaxed to >= this epsilon. The bound is invariant
/// under positive scaling, so the epsilon only fixes a normalization.
const STRICT_EPS: f64 = 1e-7;

/// Winning subproblem of the fan-out, with its certificate re-derived
/// from the graph data rather than trusted from the LP objective.
#[derive(Debug, Clone)]
pub struct GeneralRatioOutcome {
    pub certificate: RatioCertificate,
    /// Vertex whose diagonal entry realizes W(p).
    pub vertex: usize,
    /// Index (into the distinct eigenvalues) realizing lambda(p).
    pub eigenvalue_index: usize,
}

/// Builds the subproblem for vertex `u` and eigenvalue index `ell`:
/// variables are the t+1 polynomial coefficients, free of sign.
pub fn general_ratio_problem(
    spectrum: &Spectrum,
    walk_diag: &WalkDiagonal,
    t: u32,
    u: usize,
    ell: usize,
) -> LpProblem {
    let d = spectrum.d();
    let width = t as usize + 1;
    let theta0 = spectrum.largest();
    let theta_ell = spectrum.theta(ell);
    let pow = |x: f64, i: usize| x.powi(i as i32);

    let objective: Vec<f64> = (0..width).map(|i| pow(theta0, i) - pow(theta_ell, i)).collect();
    let mut lp = LpProblem::new(Sense::Maximize, objective);

    // W(p) is attained at u: (p(A))_vv <= (p(A))_uu for every other v
    for v in 0..walk_diag.vertex_count() {
        if v == u {
            continue;
        }
        let coeffs: Vec<f64> = (0..width)
            .map(|i| (walk_diag.entry(v, i) - walk_diag.entry(u, i)) as f64)
            .collect();
        if coeffs.iter().all(|&c| c == 0.0) {
            continue;
        }
        lp.push(coeffs, Relation::Le, 0.0);
    }
    // scaling: (p(A))_uu - p(theta_ell) = 1
    lp.push(
        (0..width)
            .map(|i| walk_diag.entry(u, i) as f64 - pow(theta_ell, i))
            .collect(),
        Relation::Eq,
        1.0,
    );
    // p(theta_0) strictly above every other eigenvalue value
    for j in 1..=d {
        lp.push(
            (0..width).map(|i| pow(theta0, i) - pow(spectrum.theta(j), i)).collect(),
            Relation::Ge,
            STRICT_EPS,
        );
    }
    // lambda(p) is attained at ell: p(theta_j) >= p(theta_ell)
    for j in 1..=d {
        lp.push(
            (0..width)
                .map(|i| pow(spectrum.theta(j), i) - pow(theta_ell, i))
                .collect(),
            Relation::Ge,
            0.0,
        );
    }
    lp
}

/// Optimizes the general Ratio-type bound over all degree-t
/// polynomials, taking the maximum over the d*n subproblems (d
/// subproblems when the graph is walk-regular, since every vertex then
/// yields the same program). Deterministic: ties break to the lowest
/// (vertex, eigenvalue) pair.
pub fn lp_general_ratio(g: &Graph, t: u32) -> Result<GeneralRatioOutcome> {
    let spectrum = numeric_spectrum(g, DEFAULT_NUMERIC_TOL)?;
    lp_general_ratio_with_spectrum(g, &spectrum, t)
}

/// Same fan-out with a caller-supplied spectrum (exact closed forms
/// beat the numeric eigensolver on the structured families).
pub fn lp_general_ratio_with_spectrum(
    g: &Graph,
    spectrum: &Spectrum,
    t: u32,
) -> Result<GeneralRatioOutcome> {
    if t < 1 {
        return Err(Error::InvalidParameter("t must be >= 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::InvalidParameter("graph must be connected".into()));
    }
    let d = spectrum.d();
    if d < 2 {
        return Err(Error::BoundInapplicable(
            "need at least three distinct eigenvalues".into(),
        ));
    }
    let walk_diag = walk_diagonal(g, t)?;
    let vertices: Vec<usize> = if walk_diag.all_columns_constant() {
        vec![0]
    } else {
        (0..g.vertex_count()).collect()
    };

    let mut best: Option<GeneralRatioOutcome> = None;
    for &u in &vertices {
        for ell in 1..=d {
            let lp = general_ratio_problem(spectrum, &walk_diag, t, u, ell);
            let solution = solve_lp(&lp)?;
            if solution.status != LpStatus::Optimal {
                continue;
            }
            let p = Polynomial::new(solution.values);
            let Ok(certificate) = eval_ratio_general(spectrum, &walk_diag, &p) else {
                continue;
            };
            let better = match &best {
                None => true,
                Some(b) => certificate.bound_plain > b.certificate.bound_plain + 1e-12,
            };
            if better {
                best = Some(GeneralRatioOutcome {
                    certificate,
                    vertex: u,
                    eigenvalue_index: ell,
                });
            }
        }
    }
    best.ok_or(Error::BoundUnavailable)
}
