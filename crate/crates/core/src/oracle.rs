//! Exact brute-force computation of chromatic and independence numbers
//! on small graphs. These searches validate every spectral bound in the
//! crate; they are deterministic (fixed orders, no randomization) and
//! budget-limited, returning a proven bracket on timeout.

use crate::error::{Error, Result};
use crate::graph::{graph_power, Graph};
use std::time::{Duration, Instant};

pub const DEFAULT_BUDGET_SECS: f64 = 60.0;
const CHROMATIC_VERTEX_CAP: usize = 700;
const INDEPENDENCE_VERTEX_CAP: usize = 2000;

/// Wall-clock budget for a single exact search.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    deadline: Option<Instant>,
}

impl SearchBudget {
    pub fn seconds(secs: f64) -> Self {
        SearchBudget {
            deadline: Some(Instant::now() + Duration::from_secs_f64(secs.max(0.0))),
        }
    }

    pub fn unlimited() -> Self {
        SearchBudget { deadline: None }
    }

    fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::seconds(DEFAULT_BUDGET_SECS)
    }
}

/// A proper coloring: per-vertex color indices and the number of
/// distinct colors used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringWitness {
    pub colors: Vec<u32>,
    pub color_count: u32,
}

/// Checker kept independent of the search code paths.
pub fn verify_coloring(g: &Graph, witness: &ColoringWitness) -> bool {
    if witness.colors.len() != g.vertex_count() {
        return false;
    }
    for u in 0..g.vertex_count() {
        for v in g.neighbors(u) {
            if witness.colors[u] == witness.colors[v] {
                return false;
            }
        }
    }
    let distinct: std::collections::HashSet<u32> = witness.colors.iter().copied().collect();
    distinct.len() as u32 == witness.color_count
}

pub fn verify_independent_set(g: &Graph, set: &[usize]) -> bool {
    for (i, &u) in set.iter().enumerate() {
        if u >= g.vertex_count() {
            return false;
        }
        for &v in set.iter().skip(i + 1) {
            if g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Greedy clique grown from the highest-degree vertex; a cheap
/// chromatic lower bound.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    let degs = g.degrees();
    order.sort_by_key(|&v| (std::cmp::Reverse(degs[v]), v));
    let mut clique: Vec<usize> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique
}

/// DSATUR greedy coloring: always color the most saturated vertex next.
fn dsatur_greedy(g: &Graph) -> ColoringWitness {
    let n = g.vertex_count();
    let degs = g.degrees();
    let mut colors: Vec<Option<u32>> = vec![None; n];
    let mut saturation: Vec<std::collections::BTreeSet<u32>> = vec![Default::default(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v].is_none())
            .max_by_key(|&v| (saturation[v].len(), degs[v], std::cmp::Reverse(v)))
            .expect("some vertex uncolored");
        let mut c = 0u32;
        while saturation[v].contains(&c) {
            c += 1;
        }
        colors[v] = Some(c);
        for u in g.neighbors(v) {
            saturation[u].insert(c);
        }
    }
    let colors: Vec<u32> = colors.into_iter().map(|c| c.unwrap()).collect();
    let color_count = colors.iter().copied().max().map_or(0, |m| m + 1);
    ColoringWitness { colors, color_count }
}

enum SearchOutcome {
    Found(Vec<u32>),
    Exhausted,
    TimedOut,
}

struct ColorSearch<'a> {
    g: &'a Graph,
    k: u32,
    degs: Vec<usize>,
    colors: Vec<Option<u32>>,
    // saturation[v][c] = number of neighbors of v colored c
    saturation: Vec<Vec<u32>>,
    distinct_sat: Vec<u32>,
    uncolored: usize,
    max_used: u32,
    budget: SearchBudget,
    tick: u32,
    timed_out: bool,
}

impl<'a> ColorSearch<'a> {
    fn assign(&mut self, v: usize, c: u32) {
        self.colors[v] = Some(c);
        self.uncolored -= 1;
        for u in self.g.neighbors(v) {
            if self.saturation[u][c as usize] == 0 {
                self.distinct_sat[u] += 1;
            }
            self.saturation[u][c as usize] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: u32) {
        self.colors[v] = None;
        self.uncolored += 1;
        for u in self.g.neighbors(v) {
            self.saturation[u][c as usize] -= 1;
            if self.saturation[u][c as usize] == 0 {
                self.distinct_sat[u] -= 1;
            }
        }
    }

    fn dfs(&mut self) -> SearchOutcome {
        self.tick = self.tick.wrapping_add(1);
        if self.tick % 4096 == 0 && self.budget.expired() {
            self.timed_out = true;
        }
        if self.timed_out {
            return SearchOutcome::TimedOut;
        }
        if self.uncolored == 0 {
            return SearchOutcome::Found(self.colors.iter().map(|c| c.unwrap()).collect());
        }
        // most saturated first, ties by degree then index
        let v = (0..self.g.vertex_count())
            .filter(|&v| self.colors[v].is_none())
            .max_by_key(|&v| (self.distinct_sat[v], self.degs[v], std::cmp::Reverse(v)))
            .unwrap();
        if self.distinct_sat[v] >= self.k {
            return SearchOutcome::Exhausted;
        }
        // introducing at most one fresh color breaks color symmetry
        let limit = self.k.min(self.max_used + 2);
        for c in 0..limit {
            if self.saturation[v][c as usize] > 0 {
                continue;
            }
            let prev_max = self.max_used;
            self.max_used = self.max_used.max(c);
            self.assign(v, c);
            match self.dfs() {
                SearchOutcome::Found(w) => return SearchOutcome::Found(w),
                SearchOutcome::TimedOut => return SearchOutcome::TimedOut,
                SearchOutcome::Exhausted => {}
            }
            self.unassign(v, c);
            self.max_used = prev_max;
        }
        SearchOutcome::Exhausted
    }
}

fn k_colorable(g: &Graph, k: u32, clique: &[usize], budget: SearchBudget) -> SearchOutcome {
    let n = g.vertex_count();
    let mut search = ColorSearch {
        g,
        k,
        degs: g.degrees(),
        colors: vec![None; n],
        saturation: vec![vec![0; k as usize]; n],
        distinct_sat: vec![0; n],
        uncolored: n,
        max_used: 0,
        budget,
        tick: 0,
        timed_out: false,
    };
    // pre-color the seed clique: its vertices need pairwise distinct
    // colors anyway, which kills the color-permutation symmetry
    for (i, &v) in clique.iter().enumerate() {
        if (i as u32) >= k {
            return SearchOutcome::Exhausted;
        }
        search.assign(v, i as u32);
        search.max_used = i as u32;
    }
    search.dfs()
}

/// Exact chromatic number by iterative deepening over the color count:
/// each candidate k is settled by a DSATUR-ordered backtracking search
/// seeded with a greedy clique. The witness is re-verified before being
/// returned.
pub fn exact_chromatic_number(g: &Graph, budget: SearchBudget) -> Result<(u32, ColoringWitness)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    if n > CHROMATIC_VERTEX_CAP {
        return Err(Error::TooLarge(format!(
            "chromatic search capped at {} vertices",
            CHROMATIC_VERTEX_CAP
        )));
    }
    let clique = greedy_clique(g);
    let greedy = dsatur_greedy(g);
    debug_assert!(verify_coloring(g, &greedy));
    let lower = clique.len() as u32;
    let upper = greedy.color_count;
    if lower >= upper {
        return Ok((upper, greedy));
    }
    for k in lower..upper {
        match k_colorable(g, k, &clique, budget) {
            SearchOutcome::Found(colors) => {
                let witness = ColoringWitness { colors, color_count: k };
                if !verify_coloring(g, &witness) {
                    return Err(Error::NumericFailure("search produced an invalid coloring".into()));
                }
                return Ok((k, witness));
            }
            SearchOutcome::Exhausted => {}
            SearchOutcome::TimedOut => {
                // k-1 and below are refuted, so k is a proven lower bound
                return Err(Error::Timeout {
                    lower: k as u64,
                    upper: upper as u64,
                });
            }
        }
    }
    Ok((upper, greedy))
}

/// Greedy partition of `candidates` into cliques; its size bounds any
/// independent set inside them.
fn clique_cover_bound(g: &Graph, candidates: &[usize]) -> usize {
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for &v in candidates {
        match cliques
            .iter_mut()
            .find(|c| c.iter().all(|&u| g.has_edge(u, v)))
        {
            Some(c) => c.push(v),
            None => cliques.push(vec![v]),
        }
    }
    cliques.len()
}

/// Greedy maximal independent set picking minimum remaining degree.
fn greedy_independent_set(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut alive: Vec<bool> = vec![true; n];
    let mut chosen = Vec::new();
    loop {
        let mut best: Option<(usize, usize)> = None; // (degree, vertex)
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let deg = g.neighbors(v).filter(|&u| alive[u]).count();
            if best.map_or(true, |(d, _)| deg < d) {
                best = Some((deg, v));
            }
        }
        let Some((_, v)) = best else { break };
        chosen.push(v);
        alive[v] = false;
        for u in g.neighbors(v).collect::<Vec<_>>() {
            alive[u] = false;
        }
    }
    chosen.sort_unstable();
    chosen
}

struct MisSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    budget: SearchBudget,
    tick: u32,
    timed_out: bool,
}

impl<'a> MisSearch<'a> {
    fn branch(&mut self, candidates: &[usize], current: &mut Vec<usize>) {
        self.tick = self.tick.wrapping_add(1);
        if self.tick % 2048 == 0 && self.budget.expired() {
            self.timed_out = true;
        }
        if self.timed_out {
            return;
        }
        if current.len() + candidates.len() <= self.best.len() {
            return;
        }
        if candidates.is_empty() {
            if current.len() > self.best.len() {
                self.best = current.clone();
                self.best.sort_unstable();
            }
            return;
        }
        if current.len() + clique_cover_bound(self.g, candidates) <= self.best.len() {
            return;
        }
        let v = candidates[0];
        // include v
        let kept: Vec<usize> = candidates[1..]
            .iter()
            .copied()
            .filter(|&u| !self.g.has_edge(u, v))
            .collect();
        current.push(v);
        self.branch(&kept, current);
        current.pop();
        if self.timed_out {
            return;
        }
        // exclude v, unless it is isolated among the candidates (an
        // isolated candidate always belongs to some optimum)
        if candidates[1..].iter().any(|&u| self.g.has_edge(u, v)) {
            self.branch(&candidates[1..], current);
        }
    }
}

/// Exact maximum independent set by branch and bound with greedy
/// clique-cover upper bounds.
pub fn exact_independence_number(g: &Graph, budget: SearchBudget) -> Result<(u64, Vec<usize>)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    if n > INDEPENDENCE_VERTEX_CAP {
        return Err(Error::TooLarge(format!(
            "independence search capped at {} vertices",
            INDEPENDENCE_VERTEX_CAP
        )));
    }
    let degs = g.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degs[v]), v));
    let root_upper = clique_cover_bound(g, &order) as u64;
    let mut search = MisSearch {
        g,
        best: greedy_independent_set(g),
        budget,
        tick: 0,
        timed_out: false,
    };
    debug_assert!(verify_independent_set(g, &search.best));
    let mut current = Vec::new();
    search.branch(&order, &mut current);
    if search.timed_out {
        return Err(Error::Timeout {
            lower: search.best.len() as u64,
            upper: root_upper,
        });
    }
    let best = search.best;
    if !verify_independent_set(g, &best) {
        return Err(Error::NumericFailure("search produced a dependent set".into()));
    }
    Ok((best.len() as u64, best))
}

/// chi_t as the chromatic number of the t-th power graph.
pub fn chi_t_exact(g: &Graph, t: u32, budget: SearchBudget) -> Result<(u32, ColoringWitness)> {
    exact_chromatic_number(&graph_power(g, t)?, budget)
}

/// alpha_t as the independence number of the t-th power graph.
pub fn alpha_t_exact(g: &Graph, t: u32, budget: SearchBudget) -> Result<(u64, Vec<usize>)> {
    exact_independence_number(&graph_power(g, t)?, budget)
}

/// DSATUR greedy upper bound on chi_t, with its coloring.
pub fn greedy_chi_upper(g: &Graph, t: u32) -> Result<(u32, ColoringWitness)> {
    let power = graph_power(g, t)?;
    let witness = dsatur_greedy(&power);
    if !verify_coloring(&power, &witness) {
        return Err(Error::NumericFailure("greedy coloring failed verification".into()));
    }
    Ok((witness.color_count, witness))
}
