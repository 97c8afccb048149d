//! Graph families and metric utilities: cycles, hypercubes, Lee graphs,
//! Cartesian products, graph powers and geodesic distances.

use crate::error::{Error, Result};
use std::fmt::Write as _;

/// Coordinate vectors attached to the vertices of a structured family.
/// Coordinates live in `0..alphabet`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabels {
    pub alphabet: u32,
    pub vectors: Vec<Vec<u32>>,
}

/// Dense undirected simple graph. The adjacency matrix is kept
/// symmetric with a zero diagonal by construction; labels, when
/// present, are pairwise distinct coordinate vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>, // row-major n*n
    labels: Option<VertexLabels>,
}

/// The dense adjacency representation stops making sense somewhere
/// around a hundred megabytes.
const DENSE_VERTEX_CAP: u64 = 10_000;

/// Length/alphabet pair (n, q) of the n-fold Cartesian power of the
/// q-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeeParams {
    pub n: u32,
    pub q: u32,
}

impl LeeParams {
    pub fn new(n: u32, q: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("Lee length n must be >= 1".into()));
        }
        if q < 2 {
            return Err(Error::InvalidParameter("alphabet size q must be >= 2".into()));
        }
        Ok(LeeParams { n, q })
    }

    pub fn vertex_count(&self) -> u64 {
        (self.q as u64).pow(self.n)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            labels: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "simple graph: no self-loops");
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.has_edge(u, v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        let ones = self.adj.iter().filter(|&&b| b).count();
        ones / 2
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let degs = self.degrees();
        match degs.first() {
            Some(&d) if degs.iter().all(|&x| x == d) => Some(d),
            Some(_) => None,
            None => None,
        }
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    pub fn labels(&self) -> Option<&VertexLabels> {
        self.labels.as_ref()
    }

    pub fn set_labels(&mut self, labels: VertexLabels) -> Result<()> {
        if labels.vectors.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "label count {} != vertex count {}",
                labels.vectors.len(),
                self.n
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for v in &labels.vectors {
            if !seen.insert(v.clone()) {
                return Err(Error::InvalidParameter("labels must be pairwise distinct".into()));
            }
        }
        self.labels = Some(labels);
        Ok(())
    }

    /// Index of the vertex carrying the given label, if any.
    pub fn vertex_with_label(&self, label: &[u32]) -> Option<usize> {
        let labels = self.labels.as_ref()?;
        labels.vectors.iter().position(|v| v.as_slice() == label)
    }

    /// Breadth-first distances from `start`; `None` for unreachable
    /// vertices.
    pub fn bfs_distances(&self, start: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[start] = Some(0);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// Largest finite geodesic distance; `None` when disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for u in 0..self.n {
            for d in self.bfs_distances(u) {
                match d {
                    Some(x) => best = best.max(x),
                    None => return None,
                }
            }
        }
        Some(best)
    }

    /// Plain-text edge list: `p <vertex_count>` then one `e <u> <v>`
    /// line per edge, 0-based.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p {}", self.n).unwrap();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    writeln!(out, "e {} {}", u, v).unwrap();
                }
            }
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut graph: Option<Graph> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("p") => {
                    if graph.is_some() {
                        return Err(Error::Parse(format!("line {}: duplicate p line", lineno + 1)));
                    }
                    let n: usize = parts
                        .next()
                        .ok_or_else(|| Error::Parse("p line missing vertex count".into()))?
                        .parse()
                        .map_err(|_| Error::Parse("bad vertex count".into()))?;
                    if n == 0 {
                        return Err(Error::Parse("vertex count must be positive".into()));
                    }
                    graph = Some(Graph::empty(n));
                }
                Some("e") => {
                    let g = graph
                        .as_mut()
                        .ok_or_else(|| Error::Parse("edge before p line".into()))?;
                    let u: usize = parts
                        .next()
                        .ok_or_else(|| Error::Parse("edge missing endpoint".into()))?
                        .parse()
                        .map_err(|_| Error::Parse("bad endpoint".into()))?;
                    let v: usize = parts
                        .next()
                        .ok_or_else(|| Error::Parse("edge missing endpoint".into()))?
                        .parse()
                        .map_err(|_| Error::Parse("bad endpoint".into()))?;
                    if u >= g.n || v >= g.n {
                        return Err(Error::Parse(format!("line {}: endpoint out of range", lineno + 1)));
                    }
                    if u == v {
                        return Err(Error::Parse(format!("line {}: self-loop", lineno + 1)));
                    }
                    g.add_edge(u, v);
                }
                Some(other) => {
                    return Err(Error::Parse(format!("line {}: unknown record '{}'", lineno + 1, other)));
                }
                None => {}
            }
        }
        graph.ok_or_else(|| Error::Parse("missing p line".into()))
    }
}

/// The q-cycle with vertices 0..q-1, vertex i adjacent to (i±1) mod q.
pub fn build_cycle(q: u32) -> Result<Graph> {
    if q < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs q >= 3, got {}", q)));
    }
    let n = q as usize;
    let mut g = Graph::empty(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    g.set_labels(VertexLabels {
        alphabet: q,
        vectors: (0..q).map(|i| vec![i]).collect(),
    })?;
    Ok(g)
}

/// Single edge with binary labels; the base case of the hypercube fold.
fn build_k2() -> Graph {
    let mut g = Graph::empty(2);
    g.add_edge(0, 1);
    g.set_labels(VertexLabels {
        alphabet: 2,
        vectors: vec![vec![0], vec![1]],
    })
    .unwrap();
    g
}

/// The n-dimensional hypercube: 2^n vertices labeled by binary vectors,
/// adjacent iff the Hamming distance is 1.
pub fn build_hypercube(n: u32) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("hypercube dimension must be >= 1".into()));
    }
    if (1u64 << n) > DENSE_VERTEX_CAP {
        return Err(Error::TooLarge(format!("hypercube on 2^{} vertices", n)));
    }
    let mut g = build_k2();
    for _ in 1..n {
        g = cartesian_product(&g, &build_k2())?;
    }
    Ok(g)
}

/// Cartesian product: (u1,v1) ~ (u2,v2) iff one coordinate agrees and
/// the other pair is an edge. Vertex (u,v) maps to index u*|H| + v, so
/// lexicographic label order is preserved when both factors use it.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(Error::InvalidParameter("product factors must be nonempty".into()));
    }
    let (gn, hn) = (g.vertex_count(), h.vertex_count());
    let n = gn
        .checked_mul(hn)
        .ok_or_else(|| Error::TooLarge("product vertex count overflows".into()))?;
    let mut out = Graph::empty(n);
    let idx = |u: usize, v: usize| u * hn + v;
    for u in 0..gn {
        for v in 0..hn {
            for w in h.neighbors(v) {
                if v < w {
                    out.add_edge(idx(u, v), idx(u, w));
                }
            }
        }
    }
    for v in 0..hn {
        for u in 0..gn {
            for w in g.neighbors(u) {
                if u < w {
                    out.add_edge(idx(u, v), idx(w, v));
                }
            }
        }
    }
    // labels concatenate when the alphabets agree
    if let (Some(gl), Some(hl)) = (g.labels(), h.labels()) {
        if gl.alphabet == hl.alphabet {
            let mut vectors = Vec::with_capacity(n);
            for u in 0..gn {
                for v in 0..hn {
                    let mut vec = gl.vectors[u].clone();
                    vec.extend_from_slice(&hl.vectors[v]);
                    vectors.push(vec);
                }
            }
            out.set_labels(VertexLabels {
                alphabet: gl.alphabet,
                vectors,
            })?;
        }
    }
    Ok(out)
}

/// The Lee graph: n-fold Cartesian power of the q-cycle, q^n vertices
/// labeled by vectors over 0..q in lexicographic order. For q = 2 the
/// cycle degenerates to a multigraph, so the hypercube is returned
/// instead (the two families agree there).
pub fn build_lee_graph(params: LeeParams) -> Result<Graph> {
    if params.q < 2 {
        return Err(Error::InvalidParameter("alphabet size q must be >= 2".into()));
    }
    if params.q == 2 {
        return build_hypercube(params.n);
    }
    if params.vertex_count() > DENSE_VERTEX_CAP {
        return Err(Error::TooLarge(format!("Lee graph on {} vertices", params.vertex_count())));
    }
    let cycle = build_cycle(params.q)?;
    let mut g = cycle.clone();
    for _ in 1..params.n {
        g = cartesian_product(&g, &cycle)?;
    }
    Ok(g)
}

/// Geodesic distance matrix via breadth-first search from every vertex.
/// `None` marks disconnected pairs.
pub fn all_pairs_distances(g: &Graph) -> Vec<Vec<Option<u32>>> {
    (0..g.vertex_count()).map(|u| g.bfs_distances(u)).collect()
}

/// t-th power: same vertex set, edge iff 0 < d(u,v) <= t.
pub fn graph_power(g: &Graph, t: u32) -> Result<Graph> {
    if t < 1 {
        return Err(Error::InvalidParameter("power exponent must be >= 1".into()));
    }
    let n = g.vertex_count();
    let mut out = Graph::empty(n);
    for u in 0..n {
        for (v, d) in g.bfs_distances(u).into_iter().enumerate() {
            if u < v {
                if let Some(d) = d {
                    if d >= 1 && d <= t {
                        out.add_edge(u, v);
                    }
                }
            }
        }
    }
    out.labels = g.labels.clone();
    Ok(out)
}

/// Lee distance between coordinate vectors over the alphabet 0..q:
/// per-coordinate min(|b - c|, q - |b - c|), summed.
pub fn lee_distance(u: &[u32], v: &[u32], q: u32) -> Result<u32> {
    if u.len() != v.len() {
        return Err(Error::InvalidParameter("vectors must have equal length".into()));
    }
    if q < 2 {
        return Err(Error::InvalidParameter("alphabet size q must be >= 2".into()));
    }
    let mut total = 0u32;
    for (&a, &b) in u.iter().zip(v.iter()) {
        if a >= q || b >= q {
            return Err(Error::InvalidParameter(format!(
                "coordinate out of range for alphabet {}",
                q
            )));
        }
        let diff = a.abs_diff(b);
        total += diff.min(q - diff);
    }
    Ok(total)
}
