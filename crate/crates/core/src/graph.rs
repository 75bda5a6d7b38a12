//! Undirected input graphs, directed multigraphs and the line-based graph file format.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

/// Stable identity of an edge or arc. Original edges are numbered `0..m` in input
/// order; augmented arcs added by regularization get ids `>= m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Original,
    Augmented,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
    pub kind: EdgeKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: GraphError },
    #[error("missing `n <count>` header")]
    MissingHeader,
}

/// A simple undirected graph on the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    pairs: HashSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            pairs: HashSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("complete graph edges are simple");
            }
        }
        g
    }

    /// Adds an original edge and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<EdgeId, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.pairs.insert((u.min(v), u.max(v))) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        let id = EdgeId(self.edges.len());
        self.edges.push(Edge {
            id,
            u,
            v,
            kind: EdgeKind::Original,
        });
        Ok(id)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.pairs.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Adjacency lists in edge-id order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        adj
    }

    /// Returns a copy of the graph with the edge `{u, v}` removed (ids are renumbered).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = Graph::new(self.n);
        for e in &self.edges {
            if (e.u, e.v) != (u, v) && (e.u, e.v) != (v, u) {
                g.add_edge(e.u, e.v).expect("subgraph of a simple graph is simple");
            }
        }
        g
    }
}

/// Maximum number of original edges incident to a vertex.
pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

/// Parses the graph file format: a header `n <count>`, then lines `e <u> <v>`.
/// Lines starting with `#` and blank lines are ignored.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let tag = tokens.next().unwrap_or_default();
        let nums: Vec<&str> = tokens.collect();
        let malformed = |message: &str| ParseError::Malformed {
            line,
            message: message.to_string(),
        };
        let parse_num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| malformed(&format!("expected a non-negative integer, found `{s}`")))
        };
        match (tag, &graph) {
            ("n", None) => {
                if nums.len() != 1 {
                    return Err(malformed("header must be `n <count>`"));
                }
                graph = Some(Graph::new(parse_num(nums[0])?));
            }
            ("n", Some(_)) => return Err(malformed("duplicate `n` header")),
            ("e", Some(_)) => {
                if nums.len() != 2 {
                    return Err(malformed("edge line must be `e <u> <v>`"));
                }
                let (u, v) = (parse_num(nums[0])?, parse_num(nums[1])?);
                let g = graph.as_mut().expect("header checked above");
                g.add_edge(u, v)
                    .map_err(|source| ParseError::Invalid { line, source })?;
            }
            ("e", None) => return Err(malformed("edge before `n` header")),
            _ => return Err(malformed(&format!("unknown line tag `{tag}`"))),
        }
    }
    graph.ok_or(ParseError::MissingHeader)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("n {}", g.n());
    for e in g.edges() {
        let _ = write!(out, "\ne {} {}", e.u, e.v);
    }
    out.push('\n');
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub id: EdgeId,
    pub source: usize,
    pub target: usize,
    pub kind: EdgeKind,
}

impl Arc {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }

    pub fn reversed(&self) -> Arc {
        Arc {
            source: self.target,
            target: self.source,
            ..*self
        }
    }
}

/// Directed multigraph; parallel arcs and self-loops are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedMultigraph {
    pub n: usize,
    pub arcs: Vec<Arc>,
}

impl DirectedMultigraph {
    pub fn in_out_degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut indeg = vec![0; self.n];
        let mut outdeg = vec![0; self.n];
        for a in &self.arcs {
            outdeg[a.source] += 1;
            indeg[a.target] += 1;
        }
        (indeg, outdeg)
    }

    /// True when every vertex has indegree and outdegree exactly `d`.
    pub fn is_regular(&self, d: usize) -> bool {
        let (indeg, outdeg) = self.in_out_degrees();
        indeg.iter().chain(&outdeg).all(|&x| x == d)
    }

    pub fn arc(&self, id: EdgeId) -> Option<&Arc> {
        // Arcs are stored in id order by regularization; fall back to a scan otherwise.
        match self.arcs.get(id.0) {
            Some(a) if a.id == id => Some(a),
            _ => self.arcs.iter().find(|a| a.id == id),
        }
    }
}
