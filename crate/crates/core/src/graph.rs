//! Simple undirected graphs with stable string labels, plus the structural
//! predicates the rest of the toolkit is built on: induced subgraphs,
//! connectivity, connected-prefix elimination orders and splits.
//!
//! Vertex labels are opaque strings ordered lexicographically. Every
//! deterministic tie-break in the crate (component order, elimination order,
//! obstruction scans) uses that order, so identifiers survive induced-subgraph
//! operations unchanged.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("self-loop at {0:?}")]
    SelfLoop(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph6: {0}")]
    Graph6(String),
}

/// Input formats understood by [`Graph::parse`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

/// A simple undirected graph: no self-loops, no parallel edges.
///
/// Equality is semantic: two graphs are equal when they have the same vertex
/// labels and the same edges, regardless of insertion order.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

/// Result of parsing a graph from text: the graph plus non-fatal warnings
/// (currently only duplicate edges, which are deduplicated).
#[derive(Debug)]
pub struct Parsed {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

impl Graph {
    /// Builds a graph from explicit vertex and edge lists. Vertex order is
    /// the order given; endpoints must be declared vertices.
    pub fn new(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Graph, GraphError> {
        let mut g = Graph::default();
        for v in vertices {
            g.insert_vertex(v)?;
        }
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_vertex(&mut self, label: &str) -> Result<usize, GraphError> {
        if self.index.contains_key(label) {
            return Err(GraphError::DuplicateVertex(label.to_string()));
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        self.adj.push(BTreeSet::new());
        Ok(i)
    }

    fn insert_vertex_if_new(&mut self, label: &str) -> usize {
        match self.index.get(label) {
            Some(&i) => i,
            None => self.insert_vertex(label).expect("checked for presence"),
        }
    }

    fn insert_edge(&mut self, u: &str, v: &str) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u.to_string()));
        }
        let ui = self.idx(u)?;
        let vi = self.idx(v)?;
        self.adj[ui].insert(vi);
        self.adj[vi].insert(ui);
        Ok(())
    }

    fn idx(&self, label: &str) -> Result<usize, GraphError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn contains(&self, v: &str) -> bool {
        self.index.contains_key(v)
    }

    /// Vertices in insertion order.
    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(|s| s.as_str())
    }

    /// Vertices sorted lexicographically; the order used by every
    /// deterministic tie-break in the crate.
    pub fn sorted_vertices(&self) -> Vec<&str> {
        let mut vs: Vec<&str> = self.labels.iter().map(|s| s.as_str()).collect();
        vs.sort_unstable();
        vs
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index.get(u), self.index.get(v)) {
            (Some(&ui), Some(&vi)) => self.adj[ui].contains(&vi),
            _ => false,
        }
    }

    /// Neighbors of `v`, sorted lexicographically.
    pub fn neighbors(&self, v: &str) -> Result<Vec<&str>, GraphError> {
        let vi = self.idx(v)?;
        let mut ns: Vec<&str> = self.adj[vi]
            .iter()
            .map(|&i| self.labels[i].as_str())
            .collect();
        ns.sort_unstable();
        Ok(ns)
    }

    pub fn degree(&self, v: &str) -> Result<usize, GraphError> {
        Ok(self.adj[self.idx(v)?].len())
    }

    /// Edges as label pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(String, String)> {
        let mut es = Vec::with_capacity(self.edge_count());
        for (ui, ns) in self.adj.iter().enumerate() {
            for &vi in ns {
                if ui < vi {
                    let (a, b) = (&self.labels[ui], &self.labels[vi]);
                    if a < b {
                        es.push((a.clone(), b.clone()));
                    } else {
                        es.push((b.clone(), a.clone()));
                    }
                }
            }
        }
        es.sort();
        es
    }

    /// Subgraph induced on `s`: vertex identifiers preserved, parent insertion
    /// order kept, edges exactly those of `self` with both ends in `s`.
    pub fn induced_subgraph(&self, s: &[String]) -> Result<Graph, GraphError> {
        let mut keep = BTreeSet::new();
        for v in s {
            keep.insert(self.idx(v)?);
        }
        let mut g = Graph::default();
        for (i, label) in self.labels.iter().enumerate() {
            if keep.contains(&i) {
                g.insert_vertex(label)?;
            }
        }
        for &ui in &keep {
            for &vi in &self.adj[ui] {
                if ui < vi && keep.contains(&vi) {
                    g.insert_edge(&self.labels[ui], &self.labels[vi])?;
                }
            }
        }
        Ok(g)
    }

    fn bfs_component(&self, start: usize, allowed: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if allowed.contains(&v) && seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    fn subset_connected(&self, set: &BTreeSet<usize>) -> bool {
        match set.iter().next() {
            None => true,
            Some(&start) => self.bfs_component(start, set).len() == set.len(),
        }
    }

    /// Partition of the vertex set into maximal connected sets, each sorted
    /// lexicographically, the list sorted by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<String>> {
        let all: BTreeSet<usize> = (0..self.labels.len()).collect();
        let mut remaining = all.clone();
        let mut comps: Vec<Vec<String>> = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let comp = self.bfs_component(start, &all);
            let mut labels: Vec<String> = comp.iter().map(|&i| self.labels[i].clone()).collect();
            labels.sort();
            for i in comp {
                remaining.remove(&i);
            }
            comps.push(labels);
        }
        comps.sort_by(|a, b| a[0].cmp(&b[0]));
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// An ordering of the vertices in which every prefix induces a connected
    /// subgraph. Computed as the reverse of repeatedly removing the
    /// least-labeled vertex whose removal keeps the rest connected, so the
    /// result is deterministic.
    pub fn elimination_order(&self) -> Result<Vec<String>, GraphError> {
        if self.labels.is_empty() {
            return Err(GraphError::Empty);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut remaining: BTreeSet<usize> = (0..self.labels.len()).collect();
        let mut removed: Vec<usize> = Vec::new();
        while remaining.len() > 1 {
            let mut candidates: Vec<usize> = remaining.iter().copied().collect();
            candidates.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
            let v = candidates
                .into_iter()
                .find(|&v| {
                    let mut rest = remaining.clone();
                    rest.remove(&v);
                    self.subset_connected(&rest)
                })
                .expect("every connected graph has a removable vertex");
            remaining.remove(&v);
            removed.push(v);
        }
        removed.push(*remaining.iter().next().expect("one vertex left"));
        removed.reverse();
        Ok(removed
            .into_iter()
            .map(|i| self.labels[i].clone())
            .collect())
    }

    /// True when `(x, y)` partitions the vertex set, both sides have at least
    /// two vertices, and the crossing edges form a complete bipartite graph
    /// between the boundary sets. Returns false (not an error) on any
    /// non-partition input.
    pub fn is_split(&self, x: &[String], y: &[String]) -> bool {
        let mut xi = BTreeSet::new();
        let mut yi = BTreeSet::new();
        for v in x {
            match self.index.get(v) {
                Some(&i) => {
                    xi.insert(i);
                }
                None => return false,
            }
        }
        for v in y {
            match self.index.get(v) {
                Some(&i) => {
                    yi.insert(i);
                }
                None => return false,
            }
        }
        if xi.len() < 2 || yi.len() < 2 {
            return false;
        }
        if !xi.is_disjoint(&yi) || xi.len() + yi.len() != self.labels.len() {
            return false;
        }
        let bx: Vec<usize> = xi
            .iter()
            .copied()
            .filter(|&u| self.adj[u].iter().any(|v| yi.contains(v)))
            .collect();
        let by: Vec<usize> = yi
            .iter()
            .copied()
            .filter(|&u| self.adj[u].iter().any(|v| xi.contains(v)))
            .collect();
        bx.iter()
            .all(|&u| by.iter().all(|&v| self.adj[u].contains(&v)))
    }

    /// Parses a graph from text in the given format.
    pub fn parse(text: &str, format: GraphFormat) -> Result<Parsed, GraphError> {
        match format {
            GraphFormat::EdgeList => Self::parse_edgelist(text),
            GraphFormat::Graph6 => Ok(Parsed {
                graph: Self::parse_graph6(text)?,
                warnings: Vec::new(),
            }),
        }
    }

    /// Edge-list format: one `u v` pair per line, `#` starts a comment, a
    /// single token on a line declares an isolated vertex. Vertex order is
    /// first-appearance order. Duplicate edges are deduplicated with a
    /// warning; self-loops are rejected.
    pub fn parse_edgelist(text: &str) -> Result<Parsed, GraphError> {
        let mut graph = Graph::default();
        let mut warnings = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match tokens.len() {
                0 => {}
                1 => {
                    graph.insert_vertex_if_new(tokens[0]);
                }
                2 => {
                    let (u, v) = (tokens[0], tokens[1]);
                    if u == v {
                        return Err(GraphError::Parse {
                            line,
                            msg: format!("self-loop at {u:?}"),
                        });
                    }
                    graph.insert_vertex_if_new(u);
                    graph.insert_vertex_if_new(v);
                    if graph.has_edge(u, v) {
                        warnings.push(format!("line {line}: duplicate edge {u} {v}"));
                    } else {
                        graph.insert_edge(u, v)?;
                    }
                }
                _ => {
                    return Err(GraphError::Parse {
                        line,
                        msg: format!("expected `u v`, got {} tokens", tokens.len()),
                    })
                }
            }
        }
        Ok(Parsed { graph, warnings })
    }

    /// Decodes one graph in graph6 format. Vertices are named "0".."n-1" in
    /// index order.
    pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let line = lines
            .next()
            .ok_or_else(|| GraphError::Graph6("empty input".into()))?;
        if lines.next().is_some() {
            return Err(GraphError::Graph6("expected a single graph6 line".into()));
        }
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.starts_with(':') || line.starts_with(';') {
            return Err(GraphError::Graph6(
                "sparse6/incremental encodings are not supported".into(),
            ));
        }
        let mut vals = Vec::with_capacity(line.len());
        for b in line.bytes() {
            if !(63..=126).contains(&b) {
                return Err(GraphError::Graph6(format!("invalid byte 0x{b:02x}")));
            }
            vals.push(b - 63);
        }
        let (n, header) = if vals.is_empty() {
            return Err(GraphError::Graph6("empty input".into()));
        } else if vals[0] < 63 {
            (vals[0] as usize, 1)
        } else if vals.len() >= 4 && vals[1] < 63 {
            (
                ((vals[1] as usize) << 12) | ((vals[2] as usize) << 6) | vals[3] as usize,
                4,
            )
        } else if vals.len() >= 8 {
            let mut n = 0usize;
            for &v in &vals[2..8] {
                n = (n << 6) | v as usize;
            }
            (n, 8)
        } else {
            return Err(GraphError::Graph6("truncated size header".into()));
        };
        let bits = n * (n.saturating_sub(1)) / 2;
        let data = &vals[header..];
        if data.len() != bits.div_ceil(6) {
            return Err(GraphError::Graph6(format!(
                "expected {} data bytes for n={n}, got {}",
                bits.div_ceil(6),
                data.len()
            )));
        }
        let mut graph = Graph::default();
        for i in 0..n {
            graph.insert_vertex(&i.to_string())?;
        }
        let mut pos = 0usize;
        for j in 1..n {
            for i in 0..j {
                let bit = (data[pos / 6] >> (5 - pos % 6)) & 1 != 0;
                if bit {
                    graph.insert_edge(&i.to_string(), &j.to_string())?;
                }
                pos += 1;
            }
        }
        Ok(graph)
    }

    /// Canonical edge-list text: isolated vertices first, then edges, all
    /// sorted. Parsing the output reproduces the graph, and serializing again
    /// reproduces the same text.
    pub fn to_edgelist(&self) -> String {
        let mut out = String::new();
        let mut isolated: Vec<&str> = self
            .labels
            .iter()
            .enumerate()
            .filter(|(i, _)| self.adj[*i].is_empty())
            .map(|(_, l)| l.as_str())
            .collect();
        isolated.sort_unstable();
        for v in isolated {
            out.push_str(v);
            out.push('\n');
        }
        for (u, v) in self.edges() {
            out.push_str(&u);
            out.push(' ');
            out.push_str(&v);
            out.push('\n');
        }
        out
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        if self.labels.len() != other.labels.len() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mine: BTreeSet<&str> = self.labels.iter().map(|s| s.as_str()).collect();
        let theirs: BTreeSet<&str> = other.labels.iter().map(|s| s.as_str()).collect();
        mine == theirs && self.edges() == other.edges()
    }
}

impl Eq for Graph {}

/// A vertex bipartition whose crossing edges form a complete bipartite graph
/// between the boundary sets. Sides are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    #[serde(rename = "X")]
    pub side_x: Vec<String>,
    #[serde(rename = "Y")]
    pub side_y: Vec<String>,
}

impl Split {
    pub fn new(mut side_x: Vec<String>, mut side_y: Vec<String>) -> Split {
        side_x.sort();
        side_x.dedup();
        side_y.sort();
        side_y.dedup();
        Split { side_x, side_y }
    }
}
