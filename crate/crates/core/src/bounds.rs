//! Ratio-type eigenvalue lower bounds on the distance-t chromatic
//! number: evaluation for arbitrary polynomials, the optimal closed
//! forms for t = 2 and t = 3, Johnson-type hypercube bounds, the
//! quartic/quintic hypercube family, and the Lee-graph chi_2
//! classification.

use crate::error::{Error, Result};
use crate::graph::LeeParams;
use crate::poly::{ceil_eps, floor_eps, Polynomial};
use crate::spectrum::{hypercube_walk_count, Spectrum, WalkDiagonal};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::json;

/// A polynomial together with the quantities that witness a Ratio-type
/// bound: p(lambda_1), W(p) = max_u (p(A))_uu, lambda(p) = min over
/// non-principal eigenvalues, the plain ratio bound, and (for regular
/// graphs) the floor-enhanced variant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioCertificate {
    pub polynomial: Polynomial,
    pub p_lambda1: f64,
    pub w_p: f64,
    pub lambda_p: f64,
    /// (p(lambda_1) - lambda(p)) / (W(p) - lambda(p))
    pub bound_plain: f64,
    /// n / floor(n (W(p) - lambda(p)) / (p(lambda_1) - lambda(p))),
    /// present only when the vertex count was supplied.
    pub bound_floor: Option<f64>,
    /// Ceiling of the applicable bound (floor-enhanced when present).
    pub bound_ceiled: u64,
    /// Set when the inner floor collapsed to zero, which forces the
    /// complete-power fallback value of `vertex_count`.
    pub degenerate: bool,
}

impl RatioCertificate {
    /// Assembles a certificate from the raw quantities, re-checking the
    /// p(lambda_1) > lambda(p) precondition.
    pub(crate) fn assemble(
        polynomial: Polynomial,
        p_lambda1: f64,
        w_p: f64,
        lambda_p: f64,
        vertex_count: Option<u64>,
    ) -> Result<Self> {
        let gap = p_lambda1 - lambda_p;
        if gap <= crate::FLOAT_DUST {
            return Err(Error::BoundInapplicable(
                "polynomial fails p(lambda_1) > lambda(p)".into(),
            ));
        }
        let denom = w_p - lambda_p;
        if denom <= crate::FLOAT_DUST {
            return Err(Error::BoundInapplicable(
                "W(p) does not exceed lambda(p); the ratio degenerates".into(),
            ));
        }
        let bound_plain = gap / denom;
        let (bound_floor, bound_ceiled, degenerate) = match vertex_count {
            None => (None, ceil_eps(bound_plain) as u64, false),
            Some(n) => {
                let inner = floor_eps(n as f64 * denom / gap);
                if inner < 1.0 {
                    // the fractional independence bound fell below one
                    // vertex, so the power graph is forced complete
                    (Some(n as f64), n, true)
                } else {
                    let value = n as f64 / inner;
                    (Some(value), ceil_eps(value) as u64, false)
                }
            }
        };
        Ok(RatioCertificate {
            polynomial,
            p_lambda1,
            w_p,
            lambda_p,
            bound_plain,
            bound_floor,
            bound_ceiled,
            degenerate,
        })
    }
}

/// Which bound produced a report; the names double as CLI method names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMethod {
    ClosedT2General,
    ClosedT2Regular,
    ClosedT3Regular,
    NgoLower,
    NgoUpper,
    HypercubeT45,
    LpGeneral,
    LpMinor,
    LeeTheorem,
}

impl BoundMethod {
    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "closed_t2_general" => BoundMethod::ClosedT2General,
            "closed_t2_regular" => BoundMethod::ClosedT2Regular,
            "closed_t3_regular" => BoundMethod::ClosedT3Regular,
            "ngo_lower" => BoundMethod::NgoLower,
            "ngo_upper" => BoundMethod::NgoUpper,
            "hypercube_t45" => BoundMethod::HypercubeT45,
            "lp_general" => BoundMethod::LpGeneral,
            "lp_minor" => BoundMethod::LpMinor,
            "lee_theorem" => BoundMethod::LeeTheorem,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            BoundMethod::ClosedT2General => "closed_t2_general",
            BoundMethod::ClosedT2Regular => "closed_t2_regular",
            BoundMethod::ClosedT3Regular => "closed_t3_regular",
            BoundMethod::NgoLower => "ngo_lower",
            BoundMethod::NgoUpper => "ngo_upper",
            BoundMethod::HypercubeT45 => "hypercube_t45",
            BoundMethod::LpGeneral => "lp_general",
            BoundMethod::LpMinor => "lp_minor",
            BoundMethod::LeeTheorem => "lee_theorem",
        }
    }
}

/// One computed bound, ready for serialization.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub t: u32,
    pub method: BoundMethod,
    pub value: u64,
    pub certificate: Option<RatioCertificate>,
}

impl BoundReport {
    pub fn new(
        graph_id: impl Into<String>,
        t: u32,
        method: BoundMethod,
        value: u64,
        certificate: Option<RatioCertificate>,
    ) -> Self {
        assert!(value >= 1, "chromatic bounds are at least one");
        BoundReport {
            graph_id: graph_id.into(),
            t,
            method,
            value,
            certificate,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cert = self.certificate.as_ref();
        json!({
            "graph": self.graph_id,
            "t": self.t,
            "method": self.method.name(),
            "value": self.value,
            "polynomial_coefficients": cert.map(|c| c.polynomial.coeffs().to_vec()),
            "W_p": cert.map(|c| c.w_p),
            "lambda_p": cert.map(|c| c.lambda_p),
            "plain": cert.map(|c| c.bound_plain),
            "floor_enhanced": cert.and_then(|c| c.bound_floor),
        })
    }
}

fn min_nonprincipal(spectrum: &Spectrum, p: &Polynomial) -> f64 {
    (1..spectrum.distinct_count())
        .map(|i| p.eval(spectrum.theta(i)))
        .fold(f64::INFINITY, f64::min)
}

/// Ratio-type bound for an arbitrary polynomial on an arbitrary graph:
/// chi_t >= (p(lambda_1) - lambda(p)) / (W(p) - lambda(p)).
pub fn eval_ratio_general(
    spectrum: &Spectrum,
    walk_diag: &WalkDiagonal,
    p: &Polynomial,
) -> Result<RatioCertificate> {
    if p.degree() > walk_diag.depth() {
        return Err(Error::InvalidParameter(format!(
            "polynomial degree {} exceeds walk depth {}",
            p.degree(),
            walk_diag.depth()
        )));
    }
    let p_lambda1 = p.eval(spectrum.largest());
    let lambda_p = min_nonprincipal(spectrum, p);
    let w_p = walk_diag.max_poly_diagonal(p.coeffs());
    RatioCertificate::assemble(p.clone(), p_lambda1, w_p, lambda_p, None)
}

/// Regular-graph variant: the same certificate plus the floor-enhanced
/// bound n / floor(n (W(p) - lambda(p)) / (p(lambda_1) - lambda(p))).
pub fn eval_ratio_regular(
    spectrum: &Spectrum,
    walk_diag: &WalkDiagonal,
    p: &Polynomial,
    vertex_count: u64,
) -> Result<RatioCertificate> {
    if !walk_diag.all_columns_constant() {
        return Err(Error::NotRegular(
            "walk diagonal varies across vertices; the floor-enhanced bound needs regularity".into(),
        ));
    }
    if p.degree() > walk_diag.depth() {
        return Err(Error::InvalidParameter(format!(
            "polynomial degree {} exceeds walk depth {}",
            p.degree(),
            walk_diag.depth()
        )));
    }
    let p_lambda1 = p.eval(spectrum.largest());
    let lambda_p = min_nonprincipal(spectrum, p);
    let w_p = walk_diag.max_poly_diagonal(p.coeffs());
    RatioCertificate::assemble(p.clone(), p_lambda1, w_p, lambda_p, Some(vertex_count))
}

/// Optimal quadratic bound for chi_2 on a general graph: with theta_i
/// the largest eigenvalue <= -Delta/theta_0,
/// chi_2 >= (theta_0 - theta_i)(theta_0 - theta_{i-1}) / (Delta + theta_i theta_{i-1}).
pub fn chi2_closed_general(spectrum: &Spectrum, max_degree: u64) -> Result<RatioCertificate> {
    if spectrum.distinct_count() < 3 {
        return Err(Error::BoundInapplicable(
            "need at least three distinct eigenvalues".into(),
        ));
    }
    let theta0 = spectrum.largest();
    let delta = max_degree as f64;
    let threshold = -delta / theta0;
    let i = spectrum
        .largest_at_most(threshold)
        .ok_or_else(|| Error::BoundInapplicable("no eigenvalue at or below -Delta/theta_0".into()))?;
    if i == 0 {
        return Err(Error::BoundInapplicable(
            "only the principal eigenvalue sits below the threshold".into(),
        ));
    }
    let (ti, tprev) = (spectrum.theta(i), spectrum.theta(i - 1));
    let p = Polynomial::new(vec![0.0, -(ti + tprev), 1.0]);
    let p_lambda1 = theta0 * theta0 - (ti + tprev) * theta0;
    let lambda_p = -ti * tprev;
    RatioCertificate::assemble(p, p_lambda1, delta, lambda_p, None)
}

/// Optimal quadratic bound for chi_2 on a k-regular graph, floor
/// enhanced: theta_i is the largest eigenvalue <= -1.
pub fn chi2_closed_regular(spectrum: &Spectrum, vertex_count: u64) -> Result<RatioCertificate> {
    if spectrum.distinct_count() < 3 {
        return Err(Error::BoundInapplicable(
            "need at least three distinct eigenvalues".into(),
        ));
    }
    let theta0 = spectrum.largest();
    let i = spectrum
        .largest_at_most(-1.0)
        .ok_or_else(|| Error::BoundInapplicable("no eigenvalue at or below -1".into()))?;
    if i == 0 {
        return Err(Error::BoundInapplicable(
            "only the principal eigenvalue sits below -1".into(),
        ));
    }
    let (ti, tprev) = (spectrum.theta(i), spectrum.theta(i - 1));
    let p = Polynomial::new(vec![0.0, -(ti + tprev), 1.0]);
    let p_lambda1 = theta0 * theta0 - (ti + tprev) * theta0;
    let lambda_p = -ti * tprev;
    RatioCertificate::assemble(p, p_lambda1, theta0, lambda_p, Some(vertex_count))
}

/// Optimal cubic bound for chi_3 on a k-regular graph, floor enhanced.
/// `delta3` is the largest diagonal entry of A^3. theta_s is the
/// largest eigenvalue at or below
/// -(theta_0^2 + theta_0 theta_d - Delta_3) / (theta_0 (theta_d + 1)).
pub fn chi3_closed_regular(
    spectrum: &Spectrum,
    delta3: f64,
    vertex_count: u64,
) -> Result<RatioCertificate> {
    if spectrum.distinct_count() < 4 {
        return Err(Error::BoundInapplicable(
            "need at least four distinct eigenvalues".into(),
        ));
    }
    let theta0 = spectrum.largest();
    let theta_d = spectrum.smallest();
    if (theta_d + 1.0).abs() <= crate::FLOAT_DUST {
        return Err(Error::BoundInapplicable(
            "theta_d = -1 leaves the eigenvalue threshold undefined".into(),
        ));
    }
    let threshold = -(theta0 * theta0 + theta0 * theta_d - delta3) / (theta0 * (theta_d + 1.0));
    let s = spectrum
        .largest_at_most(threshold)
        .ok_or_else(|| Error::BoundInapplicable("no eigenvalue at or below the threshold".into()))?;
    if s == 0 {
        return Err(Error::BoundInapplicable(
            "only the principal eigenvalue sits below the threshold".into(),
        ));
    }
    let (ts, tprev) = (spectrum.theta(s), spectrum.theta(s - 1));
    let p = Polynomial::from_roots(&[ts, tprev, theta_d]);
    let p_lambda1 = (theta0 - ts) * (theta0 - tprev) * (theta0 - theta_d);
    let w_p = delta3 - theta0 * (ts + tprev + theta_d) - ts * tprev * theta_d;
    RatioCertificate::assemble(p, p_lambda1, w_p, 0.0, Some(vertex_count))
}

/// Johnson-type bounds on chi_t of the n-cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NgoBounds {
    /// Ceiling of the closed-form lower-bound expression.
    pub lower: u64,
    /// Lower bound with the intermediate code-size estimate floored to
    /// an integer before dividing; this is the variant the published
    /// comparison tables use for t = 4, 5.
    pub lower_enhanced: u64,
    pub upper: u64,
}

type Rat = Ratio<i128>;

fn cumulative_binomial(n: u64, k: u64) -> i128 {
    (0..=k.min(n)).map(|i| crate::spectrum::binomial(n, i) as i128).sum()
}

/// Johnson denominator for packing radius s in dimension m:
/// sum_{i<=s} C(m,i) + C(m,s) ((m-s)/(s+1) - floor((m-s)/(s+1))) / floor(m/(s+1)).
fn johnson_denominator(m: u64, s: u64) -> Rat {
    let cum = Rat::from_integer(cumulative_binomial(m, s));
    let step = s as i128 + 1;
    let rem = (m - s) as i128 % step;
    let whole = m as i128 / step;
    cum + Rat::from_integer(crate::spectrum::binomial(m, s) as i128) * Rat::new(rem, step)
        / Rat::from_integer(whole)
}

/// Lower and upper bounds on chi_t(Q_n) via the Johnson bound on code
/// sizes. `lower` follows the even/odd closed expressions; the
/// enhanced variant rounds the intermediate A_2(n, t+1) estimate down
/// to an integer first.
pub fn ngo_bounds(n: u32, t: u32) -> Result<NgoBounds> {
    // t = n is needed by the published tables (the power graph is
    // complete one step earlier, but the Johnson route still applies)
    if t < 1 || t > n {
        return Err(Error::OutOfRange(format!("need 1 <= t <= n, got t={} n={}", t, n)));
    }
    if n > 62 {
        return Err(Error::TooLarge("dimension beyond 62".into()));
    }
    if t == 1 {
        // one-distance coloring of a bipartite graph
        return Ok(NgoBounds { lower: 2, lower_enhanced: 2, upper: 2 });
    }
    let s = (t / 2) as u64;
    let (lower, lower_enhanced) = if t % 2 == 0 {
        let j = johnson_denominator(n as u64, s);
        let lower = j.ceil().to_integer() as u64;
        let codes = (Rat::from_integer(1i128 << n) / j).floor().to_integer();
        let enhanced = Rat::new(1i128 << n, codes).ceil().to_integer() as u64;
        (lower, enhanced)
    } else {
        let j = johnson_denominator(n as u64 - 1, s);
        let lower = (j * Rat::from_integer(2)).ceil().to_integer() as u64;
        let codes = (Rat::from_integer(1i128 << (n - 1)) / j).floor().to_integer();
        let enhanced = Rat::new(1i128 << n, codes).ceil().to_integer() as u64;
        (lower, enhanced)
    };
    let upper = if t % 2 == 0 {
        let cum = cumulative_binomial(n as u64 - 1, t as u64 - 1) as u128;
        1u64 << (cum.ilog2() + 1)
    } else {
        let cum = cumulative_binomial(n as u64 - 2, t as u64 - 2) as u128;
        1u64 << (cum.ilog2() + 2)
    };
    Ok(NgoBounds { lower, lower_enhanced, upper })
}

/// Root set of the degree-t bound polynomial for chi_t(Q_n), t in {4,5}.
fn t45_roots(n: u32, t: u32) -> Vec<i64> {
    let k = (n + 3 - t) as f64;
    let m = ((k.sqrt() + k) / 2.0 - ((n + 4 - t) as f64 / 2.0).ceil()).floor() as i64;
    let even = n % 2 == 0;
    match (t, even) {
        (4, true) => vec![-(2 * m + 4), -(2 * m + 2), 2 * m, 2 * m + 2],
        (4, false) => vec![-(2 * m + 5), -(2 * m + 3), 2 * m + 1, 2 * m + 3],
        (5, true) => vec![-(n as i64), -(2 * m + 4), -(2 * m + 2), 2 * m + 2, 2 * m + 4],
        (5, false) => vec![-(n as i64), -(2 * m + 3), -(2 * m + 1), 2 * m + 1, 2 * m + 3],
        _ => unreachable!(),
    }
}

fn expand_integer_roots(roots: &[i64]) -> Vec<i128> {
    let mut coeffs: Vec<i128> = vec![1];
    for &r in roots {
        let mut next = vec![0i128; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= r as i128 * c;
        }
        coeffs = next;
    }
    coeffs
}

fn eval_integer_poly(coeffs: &[i128], x: i128) -> i128 {
    let mut acc = 0i128;
    for &c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Quartic/quintic Ratio-type bound on chi_t(Q_n) for t in {4, 5}: the
/// bound polynomial has integer roots paired around eigenvalues so that
/// lambda(p) = 0, and W(p) comes from the closed walk counts. Both the
/// plain and floor-enhanced values are exposed; the published tables
/// use the latter.
pub fn hypercube_t45_bound(n: u32, t: u32) -> Result<RatioCertificate> {
    if t != 4 && t != 5 {
        return Err(Error::InvalidParameter(format!("t must be 4 or 5, got {}", t)));
    }
    if n < t {
        return Err(Error::OutOfRange(format!("need n >= t, got n={} t={}", n, t)));
    }
    if n > 40 {
        return Err(Error::TooLarge("dimension beyond 40".into()));
    }
    let roots = t45_roots(n, t);
    let coeffs = expand_integer_roots(&roots);

    // lambda(p) = 0: nonnegative on the whole spectrum, zero exactly on
    // the roots that are eigenvalues
    for l in 0..=n {
        let theta = n as i128 - 2 * l as i128;
        let val = eval_integer_poly(&coeffs, theta);
        let is_root = roots.iter().any(|&r| r as i128 == theta);
        if val < 0 || (val == 0) != is_root {
            return Err(Error::NumericFailure(format!(
                "bound polynomial is not minorized at eigenvalue {}",
                theta
            )));
        }
    }

    let mut w: i128 = 0;
    for (i, &b) in coeffs.iter().enumerate() {
        w += b * hypercube_walk_count(n, i as u32)?;
    }
    let p_at_n = eval_integer_poly(&coeffs, n as i128);
    let polynomial = Polynomial::new(coeffs.iter().map(|&c| c as f64).collect());
    RatioCertificate::assemble(polynomial, p_at_n as f64, w as f64, 0.0, Some(1u64 << n))
}

/// Exact chi_t(Q_n) = 2^(n-1) on the band 2(n-1)/3 <= t <= n-1.
pub fn hypercube_exact_range(n: u32, t: u32) -> Option<u64> {
    if n < 2 {
        return None;
    }
    if 2 * (n - 1) <= 3 * t && t <= n - 1 {
        Some(1u64 << (n - 1))
    } else {
        None
    }
}

/// Closed classification of the chi_2 lower bound for Lee graphs with
/// q >= 4: 2n+3 for the five-cycle, 2n+1 when -1 is an eigenvalue,
/// 2n+2 otherwise.
pub fn lee_chi2_theorem_bound(params: LeeParams) -> Result<u64> {
    if params.q < 4 {
        return Err(Error::OutOfRange(format!(
            "the chi_2 classification needs q >= 4, got q={}",
            params.q
        )));
    }
    let n = params.n as u64;
    if params.n == 1 && params.q == 5 {
        return Ok(2 * n + 3);
    }
    if crate::leecode::minus_one_is_eigenvalue(params.n, params.q)? {
        Ok(2 * n + 1)
    } else {
        Ok(2 * n + 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_hypercube, build_lee_graph};
    use crate::spectrum::{cycle_spectrum, hypercube_spectrum, lee_spectrum, walk_diagonal};

    fn lee(n: u32, q: u32) -> LeeParams {
        LeeParams::new(n, q).unwrap()
    }

    #[test]
    fn ratio_general_even_hypercube_quadratic() {
        for n in [4u32, 6, 8] {
            let s = hypercube_spectrum(n).unwrap();
            let g = build_hypercube(n).unwrap();
            let wd = walk_diagonal(&g, 2).unwrap();
            // x^2 - (theta_i + theta_{i-1}) x with theta_i = -2, theta_{i-1} = 0
            let p = Polynomial::new(vec![0.0, 2.0, 1.0]);
            let cert = eval_ratio_general(&s, &wd, &p).unwrap();
            assert!((cert.bound_plain - (n as f64 + 2.0)).abs() < 1e-9);
            assert_eq!(cert.w_p, n as f64);
            assert_eq!(cert.lambda_p, 0.0);
        }
    }

    #[test]
    fn ratio_general_linear_degenerate_case() {
        let s = hypercube_spectrum(3).unwrap();
        let g = build_hypercube(3).unwrap();
        let wd = walk_diagonal(&g, 2).unwrap();
        let p = Polynomial::new(vec![0.0, 1.0]);
        let cert = eval_ratio_general(&s, &wd, &p).unwrap();
        // W(p) = 0, lambda(p) = theta_d: bound = (theta_0 - theta_d)/(-theta_d)
        assert_eq!(cert.w_p, 0.0);
        assert!((cert.bound_plain - (3.0 + 3.0) / 3.0).abs() < 1e-12);
    }

    #[test]
    fn ratio_general_quartic_on_q7() {
        let s = hypercube_spectrum(7).unwrap();
        let g = build_hypercube(7).unwrap();
        let wd = walk_diagonal(&g, 4).unwrap();
        let p = Polynomial::from_roots(&[-5.0, -3.0, 1.0, 3.0]);
        let cert = eval_ratio_general(&s, &wd, &p).unwrap();
        assert!((cert.p_lambda1 - 2880.0).abs() < 1e-9);
        assert!((cert.w_p - 80.0).abs() < 1e-9);
        assert!((cert.bound_plain - 36.0).abs() < 1e-9);
    }

    #[test]
    fn ratio_regular_examples() {
        // Q4 with the optimal t=2 quadratic
        let s = hypercube_spectrum(4).unwrap();
        let g = build_hypercube(4).unwrap();
        let wd = walk_diagonal(&g, 2).unwrap();
        let p = Polynomial::new(vec![0.0, 2.0, 1.0]);
        let cert = eval_ratio_regular(&s, &wd, &p, 16).unwrap();
        assert_eq!(cert.bound_ceiled, 8);

        // Q7 with the quartic
        let s = hypercube_spectrum(7).unwrap();
        let g = build_hypercube(7).unwrap();
        let wd = walk_diagonal(&g, 4).unwrap();
        let p = Polynomial::from_roots(&[-5.0, -3.0, 1.0, 3.0]);
        let cert = eval_ratio_regular(&s, &wd, &p, 128).unwrap();
        assert_eq!(cert.bound_ceiled, 43);

        // Q5 with the optimal t=3 cubic (roots -1, 1, -5)
        let s = hypercube_spectrum(5).unwrap();
        let g = build_hypercube(5).unwrap();
        let wd = walk_diagonal(&g, 3).unwrap();
        let p = Polynomial::from_roots(&[-1.0, 1.0, -5.0]);
        let cert = eval_ratio_regular(&s, &wd, &p, 32).unwrap();
        assert_eq!(cert.bound_ceiled, 16);
    }

    #[test]
    fn ratio_regular_rejects_irregular() {
        let mut p3 = crate::graph::Graph::empty(3);
        p3.add_edge(0, 1);
        p3.add_edge(1, 2);
        let s = crate::spectrum::numeric_spectrum(&p3, 1e-10).unwrap();
        let wd = walk_diagonal(&p3, 2).unwrap();
        let p = Polynomial::new(vec![0.0, 0.0, 1.0]);
        assert!(matches!(
            eval_ratio_regular(&s, &wd, &p, 3),
            Err(Error::NotRegular(_))
        ));
    }

    #[test]
    fn ratio_precondition_rejected() {
        let s = hypercube_spectrum(4).unwrap();
        let g = build_hypercube(4).unwrap();
        let wd = walk_diagonal(&g, 2).unwrap();
        // -x^2 + 0x: p(4) = -16 is the global minimum over eigenvalues
        let p = Polynomial::new(vec![0.0, 0.0, -1.0]);
        assert!(matches!(
            eval_ratio_general(&s, &wd, &p),
            Err(Error::BoundInapplicable(_))
        ));
    }

    #[test]
    fn chi2_general_hypercube_parity() {
        for n in 2..=12u32 {
            let s = hypercube_spectrum(n).unwrap();
            let cert = chi2_closed_general(&s, n as u64).unwrap();
            let expected = if n % 2 == 0 { n + 2 } else { n + 1 } as f64;
            assert!((cert.bound_plain - expected).abs() < 1e-9, "n={}", n);
        }
    }

    #[test]
    fn chi2_general_five_cycle() {
        let s = cycle_spectrum(5).unwrap();
        let cert = chi2_closed_general(&s, 2).unwrap();
        assert!((cert.bound_plain - 5.0).abs() < 1e-9);
    }

    #[test]
    fn chi2_general_needs_three_eigenvalues() {
        // K4: two distinct eigenvalues
        let s = Spectrum::group(vec![(3.0, 1), (-1.0, 3)], 0.0);
        assert!(matches!(
            chi2_closed_general(&s, 3),
            Err(Error::BoundInapplicable(_))
        ));
    }

    #[test]
    fn chi2_regular_examples() {
        let cert = chi2_closed_regular(&hypercube_spectrum(8).unwrap(), 256).unwrap();
        assert_eq!(cert.bound_ceiled, 11);

        let cert = chi2_closed_regular(&lee_spectrum(lee(3, 3)).unwrap(), 27).unwrap();
        assert_eq!(cert.bound_ceiled, 9);

        let cert = chi2_closed_regular(&lee_spectrum(lee(4, 5)).unwrap(), 625).unwrap();
        assert_eq!(cert.bound_ceiled, 10);
    }

    #[test]
    fn chi3_regular_examples() {
        let cert = chi3_closed_regular(&hypercube_spectrum(3).unwrap(), 0.0, 8).unwrap();
        assert_eq!(cert.bound_ceiled, 8);

        let cert = chi3_closed_regular(&hypercube_spectrum(6).unwrap(), 0.0, 64).unwrap();
        assert_eq!(cert.bound_ceiled, 13);

        let s = lee_spectrum(lee(3, 5)).unwrap();
        let delta3 = s.power_sum(3) / 125.0;
        let cert = chi3_closed_regular(&s, delta3, 125).unwrap();
        assert_eq!(cert.bound_ceiled, 16);
    }

    #[test]
    fn chi3_rejects_shallow_or_singular_spectra() {
        // triangle: {2, -1}, d = 1
        let s = cycle_spectrum(3).unwrap();
        assert!(matches!(
            chi3_closed_regular(&s, 2.0, 3),
            Err(Error::BoundInapplicable(_))
        ));

        // theta_d = -1 exactly: K2 join-like toy spectrum
        let s = Spectrum::group(vec![(5.0, 1), (2.0, 2), (0.5, 3), (-1.0, 4)], 0.0);
        let err = chi3_closed_regular(&s, 1.0, 10).unwrap_err();
        assert!(err.to_string().contains("theta_d"), "{}", err);
    }

    #[test]
    fn ngo_examples() {
        let b = ngo_bounds(8, 2).unwrap();
        assert_eq!(b.lower, 10);

        let b = ngo_bounds(9, 3).unwrap();
        assert_eq!(b.lower, 20);

        let b = ngo_bounds(9, 4).unwrap();
        assert_eq!(b.lower_enhanced, 52);

        let b = ngo_bounds(10, 5).unwrap();
        assert_eq!(b.lower_enhanced, 103);

        // boundary rows of the published tables
        assert_eq!(ngo_bounds(4, 4).unwrap().lower_enhanced, 16);
        assert_eq!(ngo_bounds(5, 5).unwrap().lower_enhanced, 32);

        assert!(ngo_bounds(4, 7).is_err());
        assert!(ngo_bounds(4, 0).is_err());
    }

    #[test]
    fn ngo_uppers() {
        // t = 2 upper is the familiar 2^(floor(log2 n) + 1)
        assert_eq!(ngo_bounds(4, 2).unwrap().upper, 8);
        assert_eq!(ngo_bounds(8, 2).unwrap().upper, 16);
        assert_eq!(ngo_bounds(5, 3).unwrap().upper, 16);
        // sanity against exact values: chi_2(Q4) = 8 <= 8
        assert!(ngo_bounds(4, 2).unwrap().upper >= 8);
    }

    #[test]
    fn t45_internal_minorization_holds_widely() {
        // the construction must yield lambda(p) = 0 at every size: any
        // violation surfaces as a numeric-failure error
        for n in 4..=30u32 {
            hypercube_t45_bound(n, 4).unwrap();
        }
        for n in 5..=30u32 {
            hypercube_t45_bound(n, 5).unwrap();
        }
    }

    #[test]
    fn ngo_parity_closed_forms() {
        // t = 2: n+2 (even) / n+1 (odd); t = 3: 2n (even) / 2n+2 (odd)
        for n in 3..=15u32 {
            let b2 = ngo_bounds(n, 2).unwrap();
            let expect2 = if n % 2 == 0 { n + 2 } else { n + 1 } as u64;
            assert_eq!(b2.lower, expect2, "t=2 n={}", n);
            if n >= 4 {
                let b3 = ngo_bounds(n, 3).unwrap();
                let expect3 = if n % 2 == 0 { 2 * n } else { 2 * (n + 1) } as u64;
                assert_eq!(b3.lower, expect3, "t=3 n={}", n);
            }
        }
    }

    #[test]
    fn t45_examples() {
        assert_eq!(hypercube_t45_bound(7, 4).unwrap().bound_ceiled, 43);
        assert_eq!(hypercube_t45_bound(6, 4).unwrap().bound_ceiled, 32);
        assert_eq!(hypercube_t45_bound(10, 5).unwrap().bound_ceiled, 114);
        assert!(hypercube_t45_bound(3, 4).is_err());
        assert!(hypercube_t45_bound(7, 3).is_err());
    }

    #[test]
    fn t45_plain_vs_enhanced() {
        // the plain ratio for n=7, t=4 is 2880/80 = 36; the enhanced
        // table value is 43
        let cert = hypercube_t45_bound(7, 4).unwrap();
        assert!((cert.bound_plain - 36.0).abs() < 1e-9);
        assert_eq!(cert.bound_ceiled, 43);
        assert_eq!(cert.lambda_p, 0.0);
    }

    #[test]
    fn t45_coefficients_match_symmetric_sums() {
        // independent route: elementary symmetric polynomials of the
        // roots with alternating signs
        for (n, t) in [(7u32, 4u32), (10, 5), (12, 4), (13, 5)] {
            let roots = t45_roots(n, t);
            let coeffs = expand_integer_roots(&roots);
            for i in 0..=t as usize {
                let k = t as usize - i;
                // sum over k-subsets of the product of roots
                let mut total: i128 = 0;
                let idx: Vec<usize> = (0..roots.len()).collect();
                let mut choose = vec![0usize; k];
                fn rec(
                    idx: &[usize],
                    roots: &[i64],
                    choose: &mut Vec<usize>,
                    pos: usize,
                    start: usize,
                    total: &mut i128,
                ) {
                    if pos == choose.len() {
                        let mut prod = 1i128;
                        for &j in choose.iter() {
                            prod *= roots[j] as i128;
                        }
                        *total += prod;
                        return;
                    }
                    for s in start..idx.len() {
                        choose[pos] = idx[s];
                        rec(idx, roots, choose, pos + 1, s + 1, total);
                    }
                }
                rec(&idx, &roots, &mut choose, 0, 0, &mut total);
                let sign = if (t as usize + i) % 2 == 0 { 1 } else { -1 };
                assert_eq!(coeffs[i], sign * total, "n={} t={} coeff {}", n, t, i);
            }
        }
    }

    #[test]
    fn exact_range_band() {
        assert_eq!(hypercube_exact_range(3, 2), Some(4));
        assert_eq!(hypercube_exact_range(4, 3), Some(8));
        assert_eq!(hypercube_exact_range(10, 2), None);
        assert_eq!(hypercube_exact_range(10, 9), Some(512));
        assert_eq!(hypercube_exact_range(10, 10), None);
    }

    #[test]
    fn lee_theorem_examples() {
        assert_eq!(lee_chi2_theorem_bound(lee(3, 7)).unwrap(), 7);
        assert_eq!(lee_chi2_theorem_bound(lee(3, 4)).unwrap(), 8);
        assert_eq!(lee_chi2_theorem_bound(lee(1, 5)).unwrap(), 5);
        assert!(matches!(lee_chi2_theorem_bound(lee(2, 3)), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn floor_dominates_plain_on_regular_corpus() {
        let mut spectra = vec![];
        for n in 2..=10u32 {
            spectra.push((hypercube_spectrum(n).unwrap(), 1u64 << n));
        }
        for q in 3..=9u32 {
            spectra.push((lee_spectrum(lee(3, q)).unwrap(), (q as u64).pow(3)));
        }
        for (s, n) in spectra {
            let cert = chi2_closed_regular(&s, n).unwrap();
            let floor = cert.bound_floor.unwrap();
            assert!(
                floor >= cert.bound_plain - 1e-9,
                "floor-enhanced must dominate: {} vs {}",
                floor,
                cert.bound_plain
            );
        }
    }

    #[test]
    fn near_minus_one_sandwich() {
        // regular spectra with theta_i in [-2,-1] and theta_{i-1} in
        // (-1,0]: the plain ratio lands in (k+1, k+2], hitting k+1
        // exactly when theta_i = -1
        for (params, k) in [(lee(2, 4), 4.0), (lee(3, 4), 6.0), (lee(3, 6), 6.0), (lee(2, 8), 4.0)] {
            let s = lee_spectrum(params).unwrap();
            let i = s.largest_at_most(-1.0).unwrap();
            let (ti, tprev) = (s.theta(i), s.theta(i - 1));
            if !(ti >= -2.0 - 1e-9 && tprev > -1.0 && tprev <= 1e-9) {
                continue;
            }
            let cert = chi2_closed_regular(&s, s.vertex_count()).unwrap();
            if (ti + 1.0).abs() <= 1e-9 {
                assert!((cert.bound_plain - (k + 1.0)).abs() < 1e-9, "{:?}", params);
            } else {
                assert!(
                    cert.bound_plain > k + 1.0 + 1e-9 && cert.bound_plain <= k + 2.0 + 1e-9,
                    "{:?}: {}",
                    params,
                    cert.bound_plain
                );
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let cert = chi2_closed_regular(&hypercube_spectrum(4).unwrap(), 16).unwrap();
        let report = BoundReport::new("qn:4", 2, BoundMethod::ClosedT2Regular, cert.bound_ceiled, Some(cert));
        let v = report.to_json();
        assert_eq!(v["graph"], "qn:4");
        assert_eq!(v["method"], "closed_t2_regular");
        assert_eq!(v["value"], 8);
        assert!(v["polynomial_coefficients"].is_array());
        assert!(v["W_p"].is_number());
        assert_eq!(v["plain"].as_f64().unwrap(), 6.0);
    }

    #[test]
    fn method_names_round_trip() {
        for m in [
            BoundMethod::ClosedT2General,
            BoundMethod::ClosedT2Regular,
            BoundMethod::ClosedT3Regular,
            BoundMethod::NgoLower,
            BoundMethod::NgoUpper,
            BoundMethod::HypercubeT45,
            BoundMethod::LpGeneral,
            BoundMethod::LpMinor,
            BoundMethod::LeeTheorem,
        ] {
            assert_eq!(BoundMethod::parse(m.name()), Some(m));
        }
        assert_eq!(BoundMethod::parse("nonsense"), None);
    }

    #[test]
    fn degenerate_floor_reports_vertex_count() {
        // an inner floor of zero cannot arise from hypotheses-satisfying
        // inputs, so the guard is exercised on the assembler directly
        let p = Polynomial::new(vec![0.0, 0.0, 1.0]);
        let cert = RatioCertificate::assemble(p, 100.0, 1.0, 0.0, Some(5)).unwrap();
        assert!(cert.degenerate);
        assert_eq!(cert.bound_ceiled, 5);
        assert_eq!(cert.bound_floor, Some(5.0));
    }

    #[test]
    fn lee_chi2_families_match_walk_regular_graphs() {
        // cross-check the closed classification against the spectral
        // quadratic on a few graphs
        for (n, q) in [(2u32, 4u32), (2, 5), (3, 4)] {
            let theorem = lee_chi2_theorem_bound(lee(n, q)).unwrap();
            let s = lee_spectrum(lee(n, q)).unwrap();
            let cert = chi2_closed_regular(&s, (q as u64).pow(n)).unwrap();
            assert!(
                cert.bound_ceiled >= theorem,
                "floor-enhanced {} vs classification {} for G({},{})",
                cert.bound_ceiled,
                theorem,
                n,
                q
            );
            let _ = build_lee_graph(lee(n, q)).unwrap();
        }
    }
}
