//! Graph argument parsing and the per-family data the bound methods
//! need: spectra, degrees, vertex counts and (lazily) the graph itself.

use distchrom::{
    build_cycle, build_hypercube, build_lee_graph, cycle_spectrum, hypercube_spectrum,
    lee_spectrum, numeric_spectrum, Error, Graph, LeeParams, Result, Spectrum,
    DEFAULT_NUMERIC_TOL,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphArg {
    Hypercube(u32),
    Lee(LeeParams),
    Cycle(u32),
    File(String),
}

impl GraphArg {
    /// Grammar: `qn:<n>`, `lee:<n>:<q>`, `cycle:<q>`, `file:<path>`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = text.splitn(2, ':');
        let kind = parts.next().unwrap_or("");
        let rest = parts.next().unwrap_or("");
        match kind {
            "qn" => {
                let n = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad hypercube dimension '{}'", rest)))?;
                Ok(GraphArg::Hypercube(n))
            }
            "lee" => {
                let mut nums = rest.split(':');
                let n = nums
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad lee spec '{}'", text)))?;
                let q = nums
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad lee spec '{}'", text)))?;
                Ok(GraphArg::Lee(LeeParams::new(n, q)?))
            }
            "cycle" => {
                let q = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad cycle length '{}'", rest)))?;
                Ok(GraphArg::Cycle(q))
            }
            "file" => {
                if rest.is_empty() {
                    return Err(Error::Parse("file spec needs a path".into()));
                }
                Ok(GraphArg::File(rest.to_string()))
            }
            _ => Err(Error::Parse(format!(
                "unknown graph spec '{}'; expected qn:<n>, lee:<n>:<q>, cycle:<q> or file:<path>",
                text
            ))),
        }
    }

    pub fn id(&self) -> String {
        match self {
            GraphArg::Hypercube(n) => format!("qn:{}", n),
            GraphArg::Lee(p) => format!("lee:{}:{}", p.n, p.q),
            GraphArg::Cycle(q) => format!("cycle:{}", q),
            GraphArg::File(path) => format!("file:{}", path),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphArg::Hypercube(n) => build_hypercube(*n),
            GraphArg::Lee(p) => build_lee_graph(*p),
            GraphArg::Cycle(q) => build_cycle(*q),
            GraphArg::File(path) => Graph::from_edge_list(&std::fs::read_to_string(path)?),
        }
    }

    /// Closed-form spectrum where one exists, numeric otherwise.
    pub fn spectrum(&self) -> Result<Spectrum> {
        match self {
            GraphArg::Hypercube(n) => hypercube_spectrum(*n),
            GraphArg::Lee(p) if p.q == 2 => hypercube_spectrum(p.n),
            GraphArg::Lee(p) => lee_spectrum(*p),
            GraphArg::Cycle(q) => cycle_spectrum(*q),
            GraphArg::File(_) => numeric_spectrum(&self.build()?, DEFAULT_NUMERIC_TOL),
        }
    }

    pub fn vertex_count(&self) -> Result<u64> {
        Ok(match self {
            GraphArg::Hypercube(n) => 1u64 << n,
            GraphArg::Lee(p) => p.vertex_count(),
            GraphArg::Cycle(q) => *q as u64,
            GraphArg::File(_) => self.build()?.vertex_count() as u64,
        })
    }

    /// Max degree; the structured families are regular.
    pub fn max_degree(&self) -> Result<u64> {
        Ok(match self {
            GraphArg::Hypercube(n) => *n as u64,
            GraphArg::Lee(p) if p.q == 2 => p.n as u64,
            GraphArg::Lee(p) => 2 * p.n as u64,
            GraphArg::Cycle(_) => 2,
            GraphArg::File(_) => self.build()?.max_degree() as u64,
        })
    }

    pub fn is_walk_regular_family(&self) -> bool {
        !matches!(self, GraphArg::File(_))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_specs() {
        assert_eq!(GraphArg::parse("qn:5").unwrap(), GraphArg::Hypercube(5));
        assert_eq!(
            GraphArg::parse("lee:3:7").unwrap(),
            GraphArg::Lee(LeeParams::new(3, 7).unwrap())
        );
        assert_eq!(GraphArg::parse("cycle:6").unwrap(), GraphArg::Cycle(6));
        assert_eq!(
            GraphArg::parse("file:/tmp/g.txt").unwrap(),
            GraphArg::File("/tmp/g.txt".into())
        );
        assert!(GraphArg::parse("grid:3").is_err());
        assert!(GraphArg::parse("lee:3").is_err());
        assert!(GraphArg::parse("qn:x").is_err());
    }

    #[test]
    fn spectra_line_up_with_graphs() {
        let arg = GraphArg::parse("lee:2:5").unwrap();
        assert_eq!(arg.vertex_count().unwrap(), 25);
        assert_eq!(arg.max_degree().unwrap(), 4);
        let s = arg.spectrum().unwrap();
        assert_eq!(s.vertex_count(), 25);
    }
}
