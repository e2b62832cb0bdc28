//! Simple undirected graphs with stable edge indexing, the edge-list text
//! format, named families and the randomly-matchable shape recognizer.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Edge `i` is the `i`-th pair of the list passed at construction, and
/// indices never change afterwards; every other module refers to edges by
/// these indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} = ({u},{v}) references a vertex >= n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} is a self-loop at {u}"
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} = ({u},{v}) is a duplicate"
                )));
            }
            incident[u].push(i);
            incident[v].push(i);
        }
        Ok(Graph { n, edges, incident })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            incident: vec![Vec::new(); n],
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// Edge indices incident to `v`, in increasing order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incident[v].iter().map(move |&e| {
            let (a, b) = self.edges[e];
            if a == v {
                b
            } else {
                a
            }
        })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors(u).any(|w| w == v)
    }

    pub fn check_edge(&self, i: usize) -> Result<()> {
        if i < self.m() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                index: i,
                m: self.m(),
            })
        }
    }

    /// Connected components as sorted vertex lists, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order. Edges keep their relative order from `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Parses the edge-list text format.
    ///
    /// An optional `n <count>` line (before any edge) fixes the vertex count,
    /// otherwise it is one more than the largest vertex mentioned. `#` starts
    /// a comment and blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut declared: Option<usize> = None;
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        let mut max_vertex: Option<usize> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line, msg };
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if tokens[0] == "n" {
                if declared.is_some() || !edges.is_empty() {
                    return Err(err("vertex-count header must precede all edges".into()));
                }
                if tokens.len() != 2 {
                    return Err(err(format!("expected `n <count>`, found `{content}`")));
                }
                let count = tokens[1]
                    .parse::<usize>()
                    .map_err(|_| err(format!("invalid vertex count `{}`", tokens[1])))?;
                declared = Some(count);
                continue;
            }
            if tokens.len() != 2 {
                return Err(err(format!("expected `<u> <v>`, found `{content}`")));
            }
            let parse_vertex = |tok: &str| {
                tok.parse::<usize>()
                    .map_err(|_| err(format!("invalid vertex `{tok}`")))
            };
            let u = parse_vertex(tokens[0])?;
            let v = parse_vertex(tokens[1])?;
            if u == v {
                return Err(err(format!("self-loop at vertex {u}")));
            }
            if let Some(n) = declared {
                if u >= n || v >= n {
                    return Err(err(format!(
                        "vertex {} exceeds declared count n = {n}",
                        u.max(v)
                    )));
                }
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(err(format!("duplicate edge {u} {v}")));
            }
            max_vertex = Some(max_vertex.map_or(u.max(v), |m: usize| m.max(u).max(v)));
            edges.push((u, v));
        }

        let n = declared.unwrap_or_else(|| max_vertex.map_or(0, |m| m + 1));
        Graph::new(n, edges)
    }

    /// Canonical edge-list text: header line, then one edge per line in
    /// index order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Shape of every connected component, ordered by smallest vertex.
    pub fn recognize_structure(&self) -> Vec<ComponentShape> {
        self.components()
            .iter()
            .map(|comp| component_shape(&self.induced_subgraph(comp)))
            .collect()
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse_edge_list(s)
    }
}

/// Randomly-matchable shape of a connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentShape {
    /// `K_{2k}`, `k >= 1`. `K_2` is reported here rather than as `K_{1,1}`.
    CompleteEven,
    /// `K_{k,k}`, `k >= 2`.
    BalancedCompleteBipartite,
    Other,
}

fn component_shape(c: &Graph) -> ComponentShape {
    let n = c.n();
    if n >= 2 && n.is_multiple_of(2) && c.m() == n * (n - 1) / 2 {
        return ComponentShape::CompleteEven;
    }
    // 2-colour; a connected bipartite graph has a unique bipartition.
    let mut side = vec![u8::MAX; n];
    if n == 0 {
        return ComponentShape::Other;
    }
    side[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for w in c.neighbors(v) {
            if side[w] == u8::MAX {
                side[w] = 1 - side[v];
                queue.push_back(w);
            } else if side[w] == side[v] {
                return ComponentShape::Other;
            }
        }
    }
    let a = side.iter().filter(|&&s| s == 0).count();
    let b = n - a;
    if a == b && a >= 1 && c.m() == a * b {
        ComponentShape::BalancedCompleteBipartite
    } else {
        ComponentShape::Other
    }
}

/// Named graph families with deterministic vertex and edge order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    /// `P_n` on `n` vertices.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    /// `K_{1,n}`: centre 0 and leaves `1..=n`.
    Star(usize),
    /// `n` isolated vertices.
    Empty(usize),
}

impl GraphFamily {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{self}: {msg}")));
        match *self {
            GraphFamily::Path(0)
            | GraphFamily::Complete(0)
            | GraphFamily::Star(0)
            | GraphFamily::Empty(0) => bad("parameter must be positive"),
            GraphFamily::Cycle(n) if n < 3 => bad("a cycle needs at least 3 vertices"),
            GraphFamily::CompleteBipartite(a, b) if a == 0 || b == 0 => {
                bad("both parts must be non-empty")
            }
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let (n, edges): (usize, Vec<(usize, usize)>) = match *self {
            GraphFamily::Path(n) => (n, (1..n).map(|v| (v - 1, v)).collect()),
            GraphFamily::Cycle(n) => (
                n,
                (1..n)
                    .map(|v| (v - 1, v))
                    .chain(std::iter::once((n - 1, 0)))
                    .collect(),
            ),
            GraphFamily::Complete(n) => (
                n,
                (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect(),
            ),
            GraphFamily::CompleteBipartite(a, b) => (
                a + b,
                (0..a)
                    .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                    .collect(),
            ),
            GraphFamily::Star(k) => (k + 1, (1..=k).map(|v| (0, v)).collect()),
            GraphFamily::Empty(n) => (n, Vec::new()),
        };
        Graph::new(n, edges)
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            GraphFamily::Path(n)
            | GraphFamily::Cycle(n)
            | GraphFamily::Complete(n)
            | GraphFamily::Empty(n) => n,
            GraphFamily::CompleteBipartite(a, b) => a + b,
            GraphFamily::Star(k) => k + 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GraphFamily::Path(_) => "path",
            GraphFamily::Cycle(_) => "cycle",
            GraphFamily::Complete(_) => "complete",
            GraphFamily::CompleteBipartite(..) => "complete_bipartite",
            GraphFamily::Star(_) => "star",
            GraphFamily::Empty(_) => "empty",
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphFamily::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            GraphFamily::Path(n)
            | GraphFamily::Cycle(n)
            | GraphFamily::Complete(n)
            | GraphFamily::Star(n)
            | GraphFamily::Empty(n) => write!(f, "{}:{n}", self.name()),
        }
    }
}

/// Parses `family:params`, e.g. `path:4`, `complete:6`,
/// `complete_bipartite:3,3`.
impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(s.to_string());
        let (name, params) = s.split_once(':').ok_or_else(bad)?;
        let nums = params
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let family = match (name.trim(), nums.as_slice()) {
            ("path", &[n]) => GraphFamily::Path(n),
            ("cycle", &[n]) => GraphFamily::Cycle(n),
            ("complete", &[n]) => GraphFamily::Complete(n),
            ("complete_bipartite", &[a, b]) => GraphFamily::CompleteBipartite(a, b),
            ("star", &[n]) => GraphFamily::Star(n),
            ("empty", &[n]) => GraphFamily::Empty(n),
            _ => return Err(bad()),
        };
        family.validate()?;
        Ok(family)
    }
}
