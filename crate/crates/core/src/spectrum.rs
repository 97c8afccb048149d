//! Adjacency spectra: closed forms for cycles, hypercubes and Lee
//! graphs, a dense Jacobi eigensolver for arbitrary graphs, and
//! closed-walk diagonal counts.

use crate::error::{Error, Result};
use crate::graph::{Graph, LeeParams};
use std::f64::consts::PI;
use std::fmt::Write as _;

/// Grouped adjacency spectrum: (eigenvalue, multiplicity) pairs sorted
/// strictly descending by value. Multiplicities sum to the vertex
/// count and the multiplicity-weighted value sum is the (zero) trace.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    entries: Vec<(f64, u64)>,
}

impl Spectrum {
    /// Groups raw (value, multiplicity) pairs: values closer than `tol`
    /// collapse into one entry holding their multiplicity-weighted mean.
    pub fn group(mut pairs: Vec<(f64, u64)>, tol: f64) -> Self {
        pairs.retain(|&(_, m)| m > 0);
        pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        let mut entries: Vec<(f64, u64)> = Vec::new();
        for (v, m) in pairs {
            match entries.last_mut() {
                Some((last, mult)) if (*last - v).abs() <= tol => {
                    // weighted mean keeps merged cosine sums centered
                    let total = *mult + m;
                    *last = (*last * (*mult as f64) + v * (m as f64)) / (total as f64);
                    *mult = total;
                }
                _ => entries.push((v, m)),
            }
        }
        // values within dust of an integer are snapped; the structured
        // families in scope have many exact integer eigenvalues
        for (v, _) in entries.iter_mut() {
            if (*v - v.round()).abs() < 1e-9 {
                *v = v.round();
            }
        }
        Spectrum { entries }
    }

    pub fn entries(&self) -> &[(f64, u64)] {
        &self.entries
    }

    /// Number of distinct eigenvalues minus one (the `d` of the
    /// three-term notation theta_0 > ... > theta_d).
    pub fn d(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    /// i-th distinct eigenvalue in descending order.
    pub fn theta(&self, i: usize) -> f64 {
        self.entries[i].0
    }

    pub fn multiplicity(&self, i: usize) -> u64 {
        self.entries[i].1
    }

    pub fn vertex_count(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn largest(&self) -> f64 {
        self.entries[0].0
    }

    pub fn smallest(&self) -> f64 {
        self.entries[self.entries.len() - 1].0
    }

    /// Sum of m_i * theta_i^k, the trace of A^k.
    pub fn power_sum(&self, k: u32) -> f64 {
        self.entries
            .iter()
            .map(|&(v, m)| (m as f64) * v.powi(k as i32))
            .sum()
    }

    pub fn contains(&self, value: f64, tol: f64) -> bool {
        self.entries.iter().any(|&(v, _)| (v - value).abs() <= tol)
    }

    /// Index of the largest eigenvalue <= threshold, comparing with the
    /// shared dust tolerance. `None` when every eigenvalue exceeds it.
    pub fn largest_at_most(&self, threshold: f64) -> Option<usize> {
        self.entries
            .iter()
            .position(|&(v, _)| v <= threshold + crate::FLOAT_DUST)
    }

    /// JSON array of {value, multiplicity}, values with 12 significant
    /// digits.
    pub fn to_json(&self) -> String {
        let mut out = String::from("[");
        for (i, &(v, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{{\"value\":{},\"multiplicity\":{}}}", format_sig(v, 12), m).unwrap();
        }
        out.push(']');
        out
    }
}

/// Renders a float with the given number of significant digits.
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - mag).max(0) as usize;
    format!("{:.*}", decimals, x)
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Hypercube spectrum: eigenvalue n - 2l with multiplicity C(n, l),
/// l = 0..n. Exact integers.
pub fn hypercube_spectrum(n: u32) -> Result<Spectrum> {
    if n < 1 {
        return Err(Error::InvalidParameter("hypercube dimension must be >= 1".into()));
    }
    if n > 63 {
        return Err(Error::TooLarge("hypercube dimension beyond 63".into()));
    }
    let entries = (0..=n)
        .map(|l| ((n as f64) - 2.0 * (l as f64), binomial(n as u64, l as u64) as u64))
        .collect();
    Ok(Spectrum::group(entries, 0.0))
}

/// Cycle spectrum: the multiset {2 cos(2 pi l / q) : l = 1..q},
/// grouped.
pub fn cycle_spectrum(q: u32) -> Result<Spectrum> {
    if q < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs q >= 3, got {}", q)));
    }
    let pairs = (1..=q)
        .map(|l| (2.0 * (2.0 * PI * (l as f64) / (q as f64)).cos(), 1u64))
        .collect();
    Ok(Spectrum::group(pairs, grouping_tol(1)))
}

/// Grouping threshold for sums of n cosine pairs. Distinct sums in the
/// sizes in scope are separated by far more than this, while vanishing
/// combinations (e.g. 2cos72 + 2cos144 = -1) must merge.
fn grouping_tol(n: u32) -> f64 {
    1e-8 * (2.0 * n as f64).max(1.0)
}

/// Lee graph spectrum: n-fold sumset of the cycle spectrum with
/// multiplicities multiplied. Folded left with grouping after every
/// convolution so intermediate lists stay quadratic in q.
pub fn lee_spectrum(params: LeeParams) -> Result<Spectrum> {
    if params.q < 3 {
        return Err(Error::InvalidParameter("lee_spectrum needs q >= 3".into()));
    }
    let base = cycle_spectrum(params.q)?;
    let mut acc = base.clone();
    for step in 1..params.n {
        let mut pairs = Vec::with_capacity(acc.distinct_count() * base.distinct_count());
        for &(v1, m1) in acc.entries() {
            for &(v2, m2) in base.entries() {
                pairs.push((v1 + v2, m1 * m2));
            }
        }
        acc = Spectrum::group(pairs, grouping_tol(step + 1));
    }
    Ok(acc)
}

/// Eigenvalues of the symmetric adjacency matrix via the cyclic Jacobi
/// rotation method, grouped into multiplicities. `tol` is the absolute
/// accuracy target; [`DEFAULT_NUMERIC_TOL`] is the usual choice.
pub fn numeric_spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    let mut a = vec![0.0f64; n * n];
    for u in 0..n {
        for v in 0..n {
            if g.has_edge(u, v) {
                a[u * n + v] = 1.0;
            }
        }
    }
    let values = jacobi_eigenvalues(&mut a, n, tol)?;
    let max_abs = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let group_tol = 100.0 * tol * max_abs.max(1.0);
    Ok(Spectrum::group(values.into_iter().map(|v| (v, 1)).collect(), group_tol))
}

pub const DEFAULT_NUMERIC_TOL: f64 = 1e-10;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Plane-rotation sweeps over the upper triangle until the off-diagonal
/// mass drops below `tol`. Destroys `a`.
fn jacobi_eigenvalues(a: &mut [f64], n: usize, tol: f64) -> Result<Vec<f64>> {
    if n == 1 {
        return Ok(vec![a[0]]);
    }
    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p * n + q].abs();
            }
        }
        if off < tol {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < f64::MIN_POSITIVE {
                    continue;
                }
                let theta = 0.5 * (a[q * n + q] - a[p * n + p]) / apq;
                let t = {
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                a[p * n + p] -= h;
                a[q * n + q] += h;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for j in 0..n {
                    if j == p || j == q {
                        continue;
                    }
                    let g1 = a[j * n + p];
                    let h1 = a[j * n + q];
                    a[j * n + p] = g1 - s * (h1 + g1 * tau);
                    a[j * n + q] = h1 + s * (g1 - h1 * tau);
                    a[p * n + j] = a[j * n + p];
                    a[q * n + j] = a[j * n + q];
                }
            }
        }
    }
    Err(Error::NumericFailure(format!(
        "Jacobi rotations did not converge in {} sweeps",
        JACOBI_MAX_SWEEPS
    )))
}

/// Closed-walk counts of the hypercube: (A^i)_uu as the exact integer
/// (1/2^n) * sum_j C(n, j) (n - 2j)^i.
pub fn hypercube_walk_count(n: u32, i: u32) -> Result<i128> {
    if n < 1 {
        return Err(Error::InvalidParameter("hypercube dimension must be >= 1".into()));
    }
    if n > 63 {
        return Err(Error::TooLarge("hypercube dimension beyond 63".into()));
    }
    let mut total: i128 = 0;
    for j in 0..=n {
        let c = binomial(n as u64, j as u64) as i128;
        let base = n as i128 - 2 * j as i128;
        let mut pw: i128 = 1;
        for _ in 0..i {
            pw = pw
                .checked_mul(base)
                .ok_or_else(|| Error::NumericFailure("walk count overflow".into()))?;
        }
        total = total
            .checked_add(
                c.checked_mul(pw)
                    .ok_or_else(|| Error::NumericFailure("walk count overflow".into()))?,
            )
            .ok_or_else(|| Error::NumericFailure("walk count overflow".into()))?;
    }
    let denom = 1i128 << n;
    if total.rem_euclid(denom) != 0 {
        return Err(Error::NumericFailure(
            "walk-count trace does not split evenly over vertices".into(),
        ));
    }
    Ok(total / denom)
}

/// Per-vertex diagonal entries of A^0..A^t. Column 0 is all ones,
/// column 1 all zeros, column 2 the degree sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkDiagonal {
    per_vertex: Vec<Vec<i64>>,
}

impl WalkDiagonal {
    /// Highest power recorded.
    pub fn depth(&self) -> usize {
        self.per_vertex[0].len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.per_vertex.len()
    }

    pub fn entry(&self, u: usize, i: usize) -> i64 {
        self.per_vertex[u][i]
    }

    pub fn row(&self, u: usize) -> &[i64] {
        &self.per_vertex[u]
    }

    pub fn column_max(&self, i: usize) -> i64 {
        self.per_vertex.iter().map(|r| r[i]).max().unwrap()
    }

    pub fn is_column_constant(&self, i: usize) -> bool {
        let first = self.per_vertex[0][i];
        self.per_vertex.iter().all(|r| r[i] == first)
    }

    pub fn all_columns_constant(&self) -> bool {
        (0..=self.depth()).all(|i| self.is_column_constant(i))
    }

    /// max_u sum_i coeffs[i] * (A^i)_uu, the W(p) of a Ratio-type
    /// certificate.
    pub fn max_poly_diagonal(&self, coeffs: &[f64]) -> f64 {
        self.per_vertex
            .iter()
            .map(|row| {
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| c * row.get(i).copied().unwrap_or(0) as f64)
                    .sum::<f64>()
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

fn dense_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            let row_b = &b[k * n..(k + 1) * n];
            let row_o = &mut out[i * n..(i + 1) * n];
            for j in 0..n {
                row_o[j] += aik * row_b[j];
            }
        }
    }
    out
}

/// Diagonals of A^0..A^t by repeated dense multiplication.
pub fn walk_diagonal(g: &Graph, t: u32) -> Result<WalkDiagonal> {
    if t < 1 {
        return Err(Error::InvalidParameter("walk depth must be >= 1".into()));
    }
    // entries of A^t are at most Delta^t; keep them inside i64
    let delta = g.max_degree() as f64;
    if delta.powi(t as i32) > 9.0e18 {
        return Err(Error::TooLarge(format!(
            "walk counts at depth {} overflow 64-bit integers",
            t
        )));
    }
    let n = g.vertex_count();
    let mut adj = vec![0i64; n * n];
    for u in 0..n {
        for v in 0..n {
            if g.has_edge(u, v) {
                adj[u * n + v] = 1;
            }
        }
    }
    let mut per_vertex: Vec<Vec<i64>> = (0..n).map(|_| Vec::with_capacity(t as usize + 1)).collect();
    for row in per_vertex.iter_mut() {
        row.push(1); // A^0 = I
    }
    let mut power = adj.clone();
    for u in 0..n {
        per_vertex[u].push(power[u * n + u]);
    }
    for _ in 2..=t {
        power = dense_mul(&power, &adj, n);
        for u in 0..n {
            per_vertex[u].push(power[u * n + u]);
        }
    }
    Ok(WalkDiagonal { per_vertex })
}

/// True iff closed-walk counts of every length <= t are the same at
/// every vertex, i.e. every column of the walk diagonal is constant.
pub fn is_partially_walk_regular(g: &Graph, t: u32) -> Result<bool> {
    Ok(walk_diagonal(g, t.max(1))?.all_columns_constant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_hypercube, build_lee_graph, Graph};

    fn spectrum_close(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
        a.distinct_count() == b.distinct_count()
            && a.entries()
                .iter()
                .zip(b.entries())
                .all(|(&(v1, m1), &(v2, m2))| (v1 - v2).abs() <= tol && m1 == m2)
    }

    #[test]
    fn hypercube_spectrum_small() {
        let s = hypercube_spectrum(3).unwrap();
        assert_eq!(s.entries(), &[(3.0, 1), (1.0, 3), (-1.0, 3), (-3.0, 1)]);

        let s1 = hypercube_spectrum(1).unwrap();
        assert_eq!(s1.entries(), &[(1.0, 1), (-1.0, 1)]);

        let s4 = hypercube_spectrum(4).unwrap();
        assert_eq!(s4.entries(), &[(4.0, 1), (2.0, 4), (0.0, 6), (-2.0, 4), (-4.0, 1)]);
    }

    #[test]
    fn cycle_spectrum_small() {
        let s4 = cycle_spectrum(4).unwrap();
        assert_eq!(s4.entries(), &[(2.0, 1), (0.0, 2), (-2.0, 1)]);

        let s6 = cycle_spectrum(6).unwrap();
        assert_eq!(s6.entries(), &[(2.0, 1), (1.0, 2), (-1.0, 2), (-2.0, 1)]);

        let s5 = cycle_spectrum(5).unwrap();
        assert_eq!(s5.distinct_count(), 3);
        assert!((s5.theta(0) - 2.0).abs() < 1e-12);
        assert!((s5.theta(1) - 2.0 * (2.0 * PI / 5.0).cos()).abs() < 1e-9);
        assert!((s5.theta(2) - 2.0 * (4.0 * PI / 5.0).cos()).abs() < 1e-9);
        assert_eq!(s5.multiplicity(1), 2);
        assert_eq!(s5.multiplicity(2), 2);
    }

    #[test]
    fn lee_spectrum_small() {
        let p = |n, q| LeeParams::new(n, q).unwrap();
        assert!(spectrum_close(&lee_spectrum(p(1, 7)).unwrap(), &cycle_spectrum(7).unwrap(), 1e-9));

        let s24 = lee_spectrum(p(2, 4)).unwrap();
        assert_eq!(s24.entries(), &[(4.0, 1), (2.0, 4), (0.0, 6), (-2.0, 4), (-4.0, 1)]);

        let s33 = lee_spectrum(p(3, 3)).unwrap();
        assert_eq!(s33.entries(), &[(6.0, 1), (3.0, 6), (0.0, 12), (-3.0, 8)]);
    }

    #[test]
    fn lee_spectrum_totals_and_extremes() {
        for n in 1..=3u32 {
            for q in 3..=7u32 {
                let s = lee_spectrum(LeeParams::new(n, q).unwrap()).unwrap();
                assert_eq!(s.vertex_count(), (q as u64).pow(n));
                assert!((s.largest() - 2.0 * n as f64).abs() < 1e-9, "regular degree 2n");
                assert!(s.power_sum(1).abs() < 1e-6, "trace must vanish");
            }
        }
        for n in 1..=8u32 {
            let s = hypercube_spectrum(n).unwrap();
            assert_eq!(s.largest(), n as f64);
            assert_eq!(s.smallest(), -(n as f64));
        }
    }

    #[test]
    fn numeric_spectrum_matches_closed_forms() {
        let mut k2 = Graph::empty(2);
        k2.add_edge(0, 1);
        let s = numeric_spectrum(&k2, DEFAULT_NUMERIC_TOL).unwrap();
        assert_eq!(s.entries(), &[(1.0, 1), (-1.0, 1)]);

        let c4 = build_cycle(4).unwrap();
        let s = numeric_spectrum(&c4, DEFAULT_NUMERIC_TOL).unwrap();
        assert!(spectrum_close(&s, &cycle_spectrum(4).unwrap(), 1e-9));

        let q3 = build_hypercube(3).unwrap();
        let s = numeric_spectrum(&q3, DEFAULT_NUMERIC_TOL).unwrap();
        assert!(spectrum_close(&s, &hypercube_spectrum(3).unwrap(), 1e-9));
    }

    #[test]
    fn numeric_matches_lee_convolution() {
        // small cases here; the full n<=3, q<=7 sweep runs in the
        // integration suite
        for (n, q) in [(2u32, 4u32), (2, 5), (3, 3)] {
            let g = build_lee_graph(LeeParams::new(n, q).unwrap()).unwrap();
            let numeric = numeric_spectrum(&g, DEFAULT_NUMERIC_TOL).unwrap();
            let closed = lee_spectrum(LeeParams::new(n, q).unwrap()).unwrap();
            assert!(
                spectrum_close(&numeric, &closed, 1e-6),
                "n={} q={}: {:?} vs {:?}",
                n,
                q,
                numeric.entries(),
                closed.entries()
            );
        }
    }

    #[test]
    fn walk_counts() {
        for n in 1..=8 {
            assert_eq!(hypercube_walk_count(n, 0).unwrap(), 1);
            assert_eq!(hypercube_walk_count(n, 2).unwrap(), n as i128);
            for i in [1u32, 3, 5, 7] {
                assert_eq!(hypercube_walk_count(n, i).unwrap(), 0, "odd closed walks");
            }
        }
        assert_eq!(hypercube_walk_count(7, 4).unwrap(), 133);
        // cross-check against the matrix-power route
        let q4 = build_hypercube(4).unwrap();
        let wd = walk_diagonal(&q4, 4).unwrap();
        for i in 0..=4u32 {
            assert!(wd.is_column_constant(i as usize));
            assert_eq!(wd.entry(0, i as usize) as i128, hypercube_walk_count(4, i).unwrap());
        }
    }

    #[test]
    fn walk_diagonal_columns() {
        let c5 = build_cycle(5).unwrap();
        let wd = walk_diagonal(&c5, 3).unwrap();
        for u in 0..5 {
            assert_eq!(wd.entry(u, 0), 1);
            assert_eq!(wd.entry(u, 1), 0);
            assert_eq!(wd.entry(u, 2), 2);
        }

        let q3 = build_hypercube(3).unwrap();
        let wd = walk_diagonal(&q3, 3).unwrap();
        for u in 0..8 {
            assert_eq!(wd.entry(u, 3), 0, "no closed 3-walks in a hypercube");
        }

        let g24 = build_lee_graph(LeeParams::new(2, 4).unwrap()).unwrap();
        let wd = walk_diagonal(&g24, 4).unwrap();
        assert!(wd.is_column_constant(4));
    }

    #[test]
    fn partial_walk_regularity() {
        let g25 = build_lee_graph(LeeParams::new(2, 5).unwrap()).unwrap();
        assert!(is_partially_walk_regular(&g25, 6).unwrap());

        // any regular graph is 2-partially walk-regular
        let c7 = build_cycle(7).unwrap();
        assert!(is_partially_walk_regular(&c7, 2).unwrap());

        // path on 3 vertices: degrees differ
        let mut p3 = Graph::empty(3);
        p3.add_edge(0, 1);
        p3.add_edge(1, 2);
        assert!(!is_partially_walk_regular(&p3, 2).unwrap());
    }

    #[test]
    fn power_sums_match_walk_traces() {
        for (n, q) in [(2u32, 4u32), (2, 5), (3, 3)] {
            let g = build_lee_graph(LeeParams::new(n, q).unwrap()).unwrap();
            let s = lee_spectrum(LeeParams::new(n, q).unwrap()).unwrap();
            let wd = walk_diagonal(&g, 4).unwrap();
            for k in 0..=4usize {
                let trace: i64 = (0..g.vertex_count()).map(|u| wd.entry(u, k)).sum();
                assert!(
                    (s.power_sum(k as u32) - trace as f64).abs() < 1e-6 * (trace.abs() as f64).max(1.0),
                    "power sum k={} mismatch for n={} q={}",
                    k,
                    n,
                    q
                );
            }
        }
    }

    #[test]
    fn spectrum_json_renders_sig_digits() {
        let s = cycle_spectrum(5).unwrap();
        let json = s.to_json();
        assert!(json.starts_with('['));
        assert!(json.contains("\"value\":2.00000000000"));
        assert!(json.contains("\"multiplicity\":2"));
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.as_array().unwrap().len(), 3);
    }

    #[test]
    fn grouping_merges_vanishing_cosine_sums() {
        // 2cos(72) + 2cos(144) = -1 exactly; the grouped two-fold sumset
        // of C5 must carry -1 as a single entry
        let s = lee_spectrum(LeeParams::new(2, 5).unwrap()).unwrap();
        assert!(s.contains(-1.0, 1e-9));
        assert_eq!(s.vertex_count(), 25);
    }
}
