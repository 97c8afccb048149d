//! Number-theoretic and coding-theoretic layer: the -1 eigenvalue test
//! for Lee graphs via numerical-semigroup membership, the existence
//! characterization for perfect Lee codes of minimum distance 3, and
//! direct code validation.

use crate::error::{Error, Result};
use crate::graph::{lee_distance, Graph};
use std::fmt::Write as _;

/// Prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> u64 {
        self.primes().product()
    }

    pub fn value(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, a)| p.pow(a))
            .product()
    }
}

/// Trial-division factorization; inputs in this crate stay small.
pub fn factorize(m: u64) -> Result<Factorization> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("cannot factor {}", m)));
    }
    let mut rest = m;
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut a = 0;
            while rest % p == 0 {
                rest /= p;
                a += 1;
            }
            factors.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// Reachability of `target` in the numerical monoid generated by
/// `generators` (zero included), by coin-problem dynamic programming.
fn monoid_contains(target: u64, generators: &[u64]) -> bool {
    let t = target as usize;
    let mut reachable = vec![false; t + 1];
    reachable[0] = true;
    for v in 1..=t {
        for &g in generators {
            let g = g as usize;
            if g != 0 && g <= v && reachable[v - g] {
                reachable[v] = true;
                break;
            }
        }
    }
    reachable[t]
}

/// Membership of n in W'(q), the set of lengths for which -1 is an
/// adjacency eigenvalue of the Lee graph: 2n+1 must be reachable in the
/// numerical monoid generated by the distinct primes of q. Necessity is
/// the weight theorem for vanishing sums of roots of unity; sufficiency
/// comes from an explicit pick construction (for even q the odd
/// 2-weight case pairs the sigma_p rotation whose cosine picks sum to
/// +1 with a single -2 pick).
pub fn w_prime_membership(n: u32, q: u32) -> Result<bool> {
    if n < 1 {
        return Err(Error::InvalidParameter("length n must be >= 1".into()));
    }
    if q < 2 {
        return Err(Error::InvalidParameter("alphabet size q must be >= 2".into()));
    }
    if n > 1_000_000 {
        return Err(Error::TooLarge("membership table beyond 2e6 entries".into()));
    }
    let f = factorize(q as u64)?;
    let generators: Vec<u64> = f.primes().collect();
    Ok(monoid_contains(2 * n as u64 + 1, &generators))
}

/// -1 is an eigenvalue of G(n,q) exactly when n lies in W'(q).
pub fn minus_one_is_eigenvalue(n: u32, q: u32) -> Result<bool> {
    w_prime_membership(n, q)
}

/// Threshold above which membership always holds for q with more than
/// one distinct prime: every n strictly above the returned value has -1
/// as an eigenvalue of G(n,q). Sylvester's bound on two generators.
pub fn minus_one_threshold(q: u32, factorization: &Factorization) -> Result<u64> {
    let primes: Vec<u64> = factorization.primes().collect();
    if primes.len() < 2 {
        return Err(Error::BoundInapplicable(
            "prime powers have no threshold; membership is sparse there".into(),
        ));
    }
    let (p1, p2) = (primes[0], primes[1]);
    let prod = if q % 2 == 0 {
        (2 * p1 - 1) * (p2 - 1)
    } else {
        (p1 - 1) * (p2 - 1)
    };
    Ok((prod - 1) / 2)
}

/// Outcome of the perfect-code existence test, together with both
/// equivalent criteria it rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerfectCodeReport {
    pub exists: bool,
    /// Radical of 2n+1.
    pub radical: u64,
    /// radical(2n+1) divides q.
    pub radical_divides_q: bool,
    /// 2n+1 divides q^n.
    pub power_divides: bool,
}

fn modpow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Existence of a perfect minimum-distance-3 Lee code of length n over
/// alphabet q: holds exactly when the radical of 2n+1 divides q
/// (equivalently, 2n+1 divides q^n; both are computed and must agree).
pub fn perfect_code_exists(n: u32, q: u32) -> Result<PerfectCodeReport> {
    if n < 1 {
        return Err(Error::InvalidParameter("length n must be >= 1".into()));
    }
    if q < 2 {
        return Err(Error::InvalidParameter("alphabet size q must be >= 2".into()));
    }
    let odd = 2 * n as u64 + 1;
    let radical = factorize(odd)?.radical();
    let radical_divides_q = q as u64 % radical == 0;
    let power_divides = modpow(q as u64, n as u64, odd) == 0;
    if radical_divides_q != power_divides {
        return Err(Error::NumericFailure(format!(
            "divisibility criteria disagree at n={}, q={}",
            n, q
        )));
    }
    Ok(PerfectCodeReport {
        exists: radical_divides_q,
        radical,
        radical_divides_q,
        power_divides,
    })
}

/// A q-ary block code of length n under the Lee metric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeeCode {
    n: usize,
    q: u32,
    codewords: Vec<Vec<u32>>,
}

impl LeeCode {
    pub fn new(n: usize, q: u32, codewords: Vec<Vec<u32>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("code length must be >= 1".into()));
        }
        if q < 2 {
            return Err(Error::InvalidParameter("alphabet size q must be >= 2".into()));
        }
        if codewords.is_empty() {
            return Err(Error::InvalidParameter("code must be nonempty".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for w in &codewords {
            if w.len() != n {
                return Err(Error::InvalidParameter("codeword length mismatch".into()));
            }
            if w.iter().any(|&c| c >= q) {
                return Err(Error::InvalidParameter("codeword coordinate out of range".into()));
            }
            if !seen.insert(w.clone()) {
                return Err(Error::InvalidParameter("duplicate codeword".into()));
            }
        }
        Ok(LeeCode { n, q, codewords })
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> u32 {
        self.q
    }

    pub fn size(&self) -> usize {
        self.codewords.len()
    }

    pub fn codewords(&self) -> &[Vec<u32>] {
        &self.codewords
    }

    /// Plain-text format: first line `n q`, then one codeword per line
    /// as space-separated integers.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.n, self.q).unwrap();
        for w in &self.codewords {
            let parts: Vec<String> = w.iter().map(|c| c.to_string()).collect();
            writeln!(out, "{}", parts.join(" ")).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty code file".into()))?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .ok_or_else(|| Error::Parse("missing length".into()))?
            .parse()
            .map_err(|_| Error::Parse("bad length".into()))?;
        let q: u32 = parts
            .next()
            .ok_or_else(|| Error::Parse("missing alphabet size".into()))?
            .parse()
            .map_err(|_| Error::Parse("bad alphabet size".into()))?;
        let mut codewords = Vec::new();
        for line in lines {
            let word: std::result::Result<Vec<u32>, _> =
                line.split_whitespace().map(|tok| tok.parse::<u32>()).collect();
            let word = word.map_err(|_| Error::Parse(format!("bad codeword line: {}", line)))?;
            codewords.push(word);
        }
        LeeCode::new(n, q, codewords)
    }
}

/// Minimum pairwise Lee distance by exhaustive pairs.
pub fn code_min_distance(code: &LeeCode) -> Result<u32> {
    if code.size() < 2 {
        return Err(Error::InvalidParameter(
            "minimum distance needs at least two codewords".into(),
        ));
    }
    let mut best = u32::MAX;
    for (i, a) in code.codewords.iter().enumerate() {
        for b in code.codewords.iter().skip(i + 1) {
            best = best.min(lee_distance(a, b, code.q)?);
        }
    }
    Ok(best)
}

/// Packing/covering verdict from full enumeration of the ambient space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerfectionReport {
    pub perfect: bool,
    /// Largest radius with pairwise disjoint codeword balls; absent for
    /// a single codeword, which is not a code in this metric's sense.
    pub packing_radius: Option<u32>,
    pub covering_radius: u32,
}

const ENUMERATION_CAP: u64 = 1_000_000;

/// Walks all of A_q^n tracking the two nearest codewords of every
/// point: the covering radius is the largest first-nearest distance,
/// and balls of radius r collide exactly when some point sees two
/// codewords within r, so the packing radius is the smallest
/// second-nearest distance minus one.
pub fn is_perfect_code(code: &LeeCode) -> Result<PerfectionReport> {
    let space: u64 = (code.q as u64)
        .checked_pow(code.n as u32)
        .ok_or_else(|| Error::TooLarge("ambient space overflows".into()))?;
    if space > ENUMERATION_CAP {
        return Err(Error::TooLarge(format!(
            "ambient space {} exceeds the enumeration cap {}",
            space, ENUMERATION_CAP
        )));
    }
    let mut covering = 0u32;
    let mut min_second = u32::MAX;
    let mut point = vec![0u32; code.n];
    loop {
        let mut d1 = u32::MAX;
        let mut d2 = u32::MAX;
        for w in &code.codewords {
            let d = lee_distance(&point, w, code.q)?;
            if d < d1 {
                d2 = d1;
                d1 = d;
            } else if d < d2 {
                d2 = d;
            }
        }
        covering = covering.max(d1);
        min_second = min_second.min(d2);
        // mixed-radix increment
        let mut i = 0;
        loop {
            if i == code.n {
                break;
            }
            point[i] += 1;
            if point[i] < code.q {
                break;
            }
            point[i] = 0;
            i += 1;
        }
        if i == code.n {
            break;
        }
    }
    if code.size() < 2 {
        return Ok(PerfectionReport {
            perfect: false,
            packing_radius: None,
            covering_radius: covering,
        });
    }
    let packing = min_second - 1;
    Ok(PerfectionReport {
        perfect: packing == covering,
        packing_radius: Some(packing),
        covering_radius: covering,
    })
}

/// Reads a distance-t independent set of a labeled Lee graph off as a
/// code: members pairwise beyond graph distance t become codewords at
/// Lee distance >= t+1.
pub fn independent_set_to_code(g: &Graph, set: &[usize], t: u32) -> Result<LeeCode> {
    let labels = g
        .labels()
        .ok_or_else(|| Error::InvalidParameter("graph carries no coordinate labels".into()))?;
    if set.len() < 2 {
        return Err(Error::InvalidWitness("a code needs at least two codewords".into()));
    }
    let mut seen = std::collections::HashSet::new();
    for &v in set {
        if v >= g.vertex_count() {
            return Err(Error::InvalidWitness(format!("vertex {} out of range", v)));
        }
        if !seen.insert(v) {
            return Err(Error::InvalidWitness(format!("vertex {} repeated", v)));
        }
    }
    for (i, &u) in set.iter().enumerate() {
        let dist = g.bfs_distances(u);
        for &v in set.iter().skip(i + 1) {
            match dist[v] {
                Some(d) if d > t => {}
                Some(d) => {
                    return Err(Error::InvalidWitness(format!(
                        "vertices {} and {} are at distance {} <= t = {}",
                        u, v, d, t
                    )));
                }
                None => {}
            }
        }
    }
    let codewords: Vec<Vec<u32>> = set.iter().map(|&v| labels.vectors[v].clone()).collect();
    LeeCode::new(codewords[0].len(), labels.alphabet, codewords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_lee_graph, LeeParams};
    use crate::spectrum::lee_spectrum;

    #[test]
    fn factorize_small() {
        let f = factorize(12).unwrap();
        assert_eq!(f.factors(), &[(2, 2), (3, 1)]);
        assert_eq!(f.value(), 12);
        assert_eq!(f.radical(), 6);

        let f = factorize(7).unwrap();
        assert_eq!(f.factors(), &[(7, 1)]);

        assert_eq!(factorize(2 * 3 + 1).unwrap().factors(), &[(7, 1)]);
        assert!(factorize(1).is_err());
    }

    #[test]
    fn w_prime_examples() {
        assert!(w_prime_membership(3, 7).unwrap());
        assert!(!w_prime_membership(2, 7).unwrap());
        assert!(w_prime_membership(1, 6).unwrap());
        assert!(w_prime_membership(1, 9).unwrap());
        assert!(!w_prime_membership(3, 4).unwrap());
        assert!(!w_prime_membership(1, 5).unwrap());
        assert!(w_prime_membership(2, 5).unwrap());
    }

    #[test]
    fn powers_of_two_never_contain_minus_one() {
        for q in [2u32, 4, 8, 16, 32] {
            for n in 1..=12 {
                assert!(!w_prime_membership(n, q).unwrap(), "n={} q={}", n, q);
            }
        }
    }

    #[test]
    fn odd_prime_powers_follow_odd_multiples() {
        // for q = p^a with p odd, membership means 2n+1 is an odd
        // multiple of p
        for (p, q) in [(3u64, 9u32), (5, 5), (7, 49), (3, 27)] {
            for n in 1..=20u32 {
                let member = w_prime_membership(n, q).unwrap();
                let odd = 2 * n as u64 + 1;
                assert_eq!(member, odd % p == 0, "n={} q={}", n, q);
            }
        }
    }

    #[test]
    fn membership_matches_spectrum() {
        // small slice of the full sweep in the integration suite
        for q in 3..=7u32 {
            for n in 1..=3u32 {
                let member = minus_one_is_eigenvalue(n, q).unwrap();
                let spectral = lee_spectrum(LeeParams::new(n, q).unwrap())
                    .unwrap()
                    .contains(-1.0, 1e-6);
                assert_eq!(member, spectral, "n={} q={}", n, q);
            }
        }
    }

    #[test]
    fn threshold_examples_and_guarantee() {
        let t6 = minus_one_threshold(6, &factorize(6).unwrap()).unwrap();
        assert_eq!(t6, 2);
        let t15 = minus_one_threshold(15, &factorize(15).unwrap()).unwrap();
        assert_eq!(t15, 3);
        let t12 = minus_one_threshold(12, &factorize(12).unwrap()).unwrap();
        assert_eq!(t12, 2);

        for q in [6u32, 10, 12, 15, 21, 30] {
            let f = factorize(q as u64).unwrap();
            let threshold = minus_one_threshold(q, &f).unwrap();
            for n in (threshold + 1)..=(threshold + 25) {
                assert!(
                    w_prime_membership(n as u32, q).unwrap(),
                    "guarantee broken at n={} q={}",
                    n,
                    q
                );
            }
        }

        assert!(minus_one_threshold(8, &factorize(8).unwrap()).is_err());
    }

    #[test]
    fn sylvester_boundary() {
        for (a, b) in [(3u64, 4u64), (3, 5), (5, 7)] {
            let conductor = (a - 1) * (b - 1);
            // the Frobenius number (a-1)(b-1) - 1 is the last gap
            assert!(!monoid_contains(conductor - 1, &[a, b]));
            for m in conductor..conductor + 20 {
                assert!(monoid_contains(m, &[a, b]), "m={} a={} b={}", m, a, b);
            }
        }
    }

    #[test]
    fn perfect_code_examples() {
        assert!(perfect_code_exists(3, 7).unwrap().exists);
        assert!(!perfect_code_exists(3, 4).unwrap().exists);
        assert!(perfect_code_exists(2, 5).unwrap().exists);
        let r = perfect_code_exists(4, 6).unwrap();
        assert_eq!(r.radical, 3);
        assert!(r.exists);
    }

    #[test]
    fn min_distance_examples() {
        let c = LeeCode::new(2, 5, vec![vec![0, 0], vec![1, 2]]).unwrap();
        assert_eq!(code_min_distance(&c).unwrap(), 3);

        let c = LeeCode::new(1, 6, vec![vec![0], vec![3]]).unwrap();
        assert_eq!(code_min_distance(&c).unwrap(), 3);

        let c = LeeCode::new(2, 4, vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(code_min_distance(&c).unwrap(), 1);

        let single = LeeCode::new(1, 4, vec![vec![0]]).unwrap();
        assert!(code_min_distance(&single).is_err());
    }

    #[test]
    fn perfection_examples() {
        // {0, 3} tiles the 6-cycle with radius-1 balls
        let c = LeeCode::new(1, 6, vec![vec![0], vec![3]]).unwrap();
        let r = is_perfect_code(&c).unwrap();
        assert!(r.perfect);
        assert_eq!(r.packing_radius, Some(1));
        assert_eq!(r.covering_radius, 1);

        // the whole space is perfect with radius 0
        let all: Vec<Vec<u32>> = (0..4).flat_map(|a| (0..4).map(move |b| vec![a, b])).collect();
        let c = LeeCode::new(2, 4, all).unwrap();
        let r = is_perfect_code(&c).unwrap();
        assert!(r.perfect);
        assert_eq!(r.packing_radius, Some(0));
        assert_eq!(r.covering_radius, 0);

        // a lone codeword is not a code
        let c = LeeCode::new(2, 4, vec![vec![0, 0]]).unwrap();
        let r = is_perfect_code(&c).unwrap();
        assert!(!r.perfect);
        assert_eq!(r.packing_radius, None);

        let too_big = LeeCode::new(8, 10, vec![vec![0; 8], vec![1; 8]]).unwrap();
        assert!(matches!(is_perfect_code(&too_big), Err(Error::TooLarge(_))));
    }

    #[test]
    fn independent_set_conversion() {
        let g = build_lee_graph(LeeParams::new(2, 5).unwrap()).unwrap();
        let a = g.vertex_with_label(&[0, 0]).unwrap();
        let b = g.vertex_with_label(&[1, 2]).unwrap();
        let code = independent_set_to_code(&g, &[a, b], 2).unwrap();
        assert_eq!(code.size(), 2);
        assert!(code_min_distance(&code).unwrap() >= 3);

        // a pair at distance 2 fails the t = 2 requirement
        let c = g.vertex_with_label(&[1, 1]).unwrap();
        assert!(matches!(
            independent_set_to_code(&g, &[a, c], 2),
            Err(Error::InvalidWitness(_))
        ));

        // singletons rejected
        assert!(matches!(
            independent_set_to_code(&g, &[a], 2),
            Err(Error::InvalidWitness(_))
        ));
    }

    #[test]
    fn code_text_round_trip() {
        let c = LeeCode::new(2, 5, vec![vec![0, 0], vec![1, 2], vec![2, 4]]).unwrap();
        let text = c.to_text();
        assert!(text.starts_with("2 5\n"));
        let back = LeeCode::from_text(&text).unwrap();
        assert_eq!(back, c);

        assert!(LeeCode::from_text("").is_err());
        assert!(LeeCode::from_text("2 5\n0 9\n").is_err());
        assert!(LeeCode::from_text("2 5\n0 0\n0 0\n").is_err());
    }
}
