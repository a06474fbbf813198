//! The Naji system of a graph: one GF(2) variable per ordered pair of
//! distinct vertices, with three families of equations.
//!
//! For an assignment `beta`:
//!
//! * `NS1(v,w)`: `beta(v,w) + beta(w,v) = 1` for every edge `vw`;
//! * `NS2(x,v,w)`: `beta(x,v) + beta(x,w) = 0` for every edge `vw` and vertex
//!   `x` adjacent to neither end;
//! * `NS3(x,v,w)`: `beta(v,w) + beta(w,v) + beta(x,v) + beta(x,w) = 1` for
//!   every non-adjacent pair `v`, `w` with a common neighbor `x`.
//!
//! The system is feasible exactly when the graph is a circle graph. The
//! solver runs bitset Gauss-Jordan elimination with proof logging, so an
//! infeasible system yields a checkable witness: a subset of rows whose GF(2)
//! sum is the contradiction 0 = 1.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::OrientedChordDiagram;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum NajiError {
    #[error("assignment has no value for ordered pair ({0}, {1})")]
    UnknownPair(String, String),
    #[error("assignment is not defined on this graph")]
    GraphMismatch,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Identifies one equation of the system. `NS2`/`NS3` are symmetric in
/// `v`, `w`, so tags are normalized with `v < w` and each equation appears
/// exactly once.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RowTag {
    #[serde(rename = "NS1")]
    Ns1 { v: String, w: String },
    #[serde(rename = "NS2")]
    Ns2 { x: String, v: String, w: String },
    #[serde(rename = "NS3")]
    Ns3 { x: String, v: String, w: String },
}

impl fmt::Display for RowTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowTag::Ns1 { v, w } => write!(f, "NS1({v},{w})"),
            RowTag::Ns2 { x, v, w } => write!(f, "NS2({x},{v},{w})"),
            RowTag::Ns3 { x, v, w } => write!(f, "NS3({x},{v},{w})"),
        }
    }
}

#[derive(Clone, Debug)]
struct Row {
    tag: RowTag,
    lhs: FixedBitSet,
    rhs: bool,
}

/// The Naji system of a graph as GF(2) rows over pair-indexed variables.
/// Variables are the ordered pairs of distinct vertices in lexicographic
/// order; rows are sorted by tag.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    graph: Graph,
    pairs: Vec<(String, String)>,
    pair_index: HashMap<(String, String), usize>,
    rows: Vec<Row>,
}

/// A subset of rows whose GF(2) sum is `0 = 1`, certifying infeasibility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InfeasibilityWitness {
    pub rows: Vec<RowTag>,
}

#[derive(Clone, Debug)]
pub enum SolveOutcome {
    Solution(NajiAssignment),
    Infeasible(InfeasibilityWitness),
}

impl SolveOutcome {
    pub fn solution(&self) -> Option<&NajiAssignment> {
        match self {
            SolveOutcome::Solution(b) => Some(b),
            SolveOutcome::Infeasible(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&InfeasibilityWitness> {
        match self {
            SolveOutcome::Solution(_) => None,
            SolveOutcome::Infeasible(w) => Some(w),
        }
    }
}

/// Builds the full system for a graph. Row order is deterministic: NS1 rows
/// sorted by `(v,w)`, then NS2 and NS3 sorted by `(x,v,w)`.
pub fn build_system(g: &Graph) -> LinearSystem {
    let verts = g.sorted_vertices();
    let mut pairs = Vec::new();
    for &u in &verts {
        for &v in &verts {
            if u != v {
                pairs.push((u.to_string(), v.to_string()));
            }
        }
    }
    let pair_index: HashMap<(String, String), usize> = pairs
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let ncols = pairs.len();
    let mut rows = Vec::new();
    let bit = |u: &str, v: &str| pair_index[&(u.to_string(), v.to_string())];
    let mut push = |tag: RowTag, cols: &[usize], rhs: bool| {
        let mut lhs = FixedBitSet::with_capacity(ncols);
        for &c in cols {
            lhs.insert(c);
        }
        rows.push(Row { tag, lhs, rhs });
    };
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            let (v, w) = (verts[i], verts[j]);
            if g.has_edge(v, w) {
                push(
                    RowTag::Ns1 {
                        v: v.into(),
                        w: w.into(),
                    },
                    &[bit(v, w), bit(w, v)],
                    true,
                );
            }
        }
    }
    for &x in &verts {
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                let (v, w) = (verts[i], verts[j]);
                if v == x || w == x || !g.has_edge(v, w) {
                    continue;
                }
                if !g.has_edge(x, v) && !g.has_edge(x, w) {
                    push(
                        RowTag::Ns2 {
                            x: x.into(),
                            v: v.into(),
                            w: w.into(),
                        },
                        &[bit(x, v), bit(x, w)],
                        false,
                    );
                }
            }
        }
    }
    for &x in &verts {
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                let (v, w) = (verts[i], verts[j]);
                if v == x || w == x || g.has_edge(v, w) {
                    continue;
                }
                if g.has_edge(x, v) && g.has_edge(x, w) {
                    push(
                        RowTag::Ns3 {
                            x: x.into(),
                            v: v.into(),
                            w: w.into(),
                        },
                        &[bit(v, w), bit(w, v), bit(x, v), bit(x, w)],
                        true,
                    );
                }
            }
        }
    }
    LinearSystem {
        graph: g.clone(),
        pairs,
        pair_index,
        rows,
    }
}

struct WorkRow {
    lhs: FixedBitSet,
    rhs: bool,
    hist: FixedBitSet,
}

impl LinearSystem {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn variable_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn tags(&self) -> impl Iterator<Item = &RowTag> {
        self.rows.iter().map(|r| &r.tag)
    }

    fn eval_row(&self, row: &Row, beta: &NajiAssignment) -> Result<bool, NajiError> {
        let mut acc = false;
        for c in row.lhs.ones() {
            let (u, v) = &self.pairs[c];
            acc ^= beta.get(u, v)?;
        }
        Ok(acc == row.rhs)
    }

    /// Gauss-Jordan elimination with proof logging. Free variables are fixed
    /// to one, so the returned solution is deterministic.
    pub fn solve(&self) -> SolveOutcome {
        let ncols = self.pairs.len();
        let nrows = self.rows.len();
        let mut work: Vec<WorkRow> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut hist = FixedBitSet::with_capacity(nrows);
                hist.insert(i);
                WorkRow {
                    lhs: r.lhs.clone(),
                    rhs: r.rhs,
                    hist,
                }
            })
            .collect();
        let mut pivot_rows: Vec<(usize, usize)> = Vec::new(); // (col, row)
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..nrows).find(|&r| work[r].lhs.contains(col)) else {
                continue;
            };
            work.swap(rank, p);
            let lhs = work[rank].lhs.clone();
            let rhs = work[rank].rhs;
            let hist = work[rank].hist.clone();
            for r in 0..nrows {
                if r != rank && work[r].lhs.contains(col) {
                    work[r].lhs.symmetric_difference_with(&lhs);
                    work[r].rhs ^= rhs;
                    work[r].hist.symmetric_difference_with(&hist);
                }
            }
            pivot_rows.push((col, rank));
            rank += 1;
        }
        if let Some(bad) = work.iter().find(|r| r.lhs.is_clear() && r.rhs) {
            let tags = bad.hist.ones().map(|i| self.rows[i].tag.clone()).collect();
            return SolveOutcome::Infeasible(InfeasibilityWitness { rows: tags });
        }
        let mut values = vec![true; ncols];
        for &(col, row) in &pivot_rows {
            let mut v = work[row].rhs;
            for c in work[row].lhs.ones() {
                if c != col {
                    v ^= values[c];
                }
            }
            values[col] = v;
        }
        let map: BTreeMap<(String, String), bool> =
            self.pairs.iter().cloned().zip(values).collect();
        SolveOutcome::Solution(NajiAssignment {
            graph: self.graph.clone(),
            values: map,
        })
    }

    /// Solves with extra unit equations pinning individual pair variables.
    /// Returns `None` when the pinned system is infeasible.
    pub fn solve_with_pins(&self, pins: &[((&str, &str), bool)]) -> Option<NajiAssignment> {
        let ncols = self.pairs.len();
        let mut rows: Vec<(FixedBitSet, bool)> =
            self.rows.iter().map(|r| (r.lhs.clone(), r.rhs)).collect();
        for ((u, v), val) in pins {
            let idx = self.pair_index.get(&(u.to_string(), v.to_string()))?;
            let mut lhs = FixedBitSet::with_capacity(ncols);
            lhs.insert(*idx);
            rows.push((lhs, *val));
        }
        let nrows = rows.len();
        let mut pivot_rows: Vec<(usize, usize)> = Vec::new();
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..nrows).find(|&r| rows[r].0.contains(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let lhs = rows[rank].0.clone();
            let rhs = rows[rank].1;
            for r in 0..nrows {
                if r != rank && rows[r].0.contains(col) {
                    rows[r].0.symmetric_difference_with(&lhs);
                    rows[r].1 ^= rhs;
                }
            }
            pivot_rows.push((col, rank));
            rank += 1;
        }
        if rows.iter().any(|(lhs, rhs)| lhs.is_clear() && *rhs) {
            return None;
        }
        let mut values = vec![true; ncols];
        for &(col, row) in &pivot_rows {
            let mut v = rows[row].1;
            for c in rows[row].0.ones() {
                if c != col {
                    v ^= values[c];
                }
            }
            values[col] = v;
        }
        let map: BTreeMap<(String, String), bool> =
            self.pairs.iter().cloned().zip(values).collect();
        Some(NajiAssignment {
            graph: self.graph.clone(),
            values: map,
        })
    }

    /// Re-sums the cited rows and confirms they add up to 0 = 1.
    pub fn check_witness(&self, witness: &InfeasibilityWitness) -> bool {
        if witness.rows.is_empty() {
            return false;
        }
        let by_tag: HashMap<&RowTag, &Row> = self.rows.iter().map(|r| (&r.tag, r)).collect();
        let mut lhs = FixedBitSet::with_capacity(self.pairs.len());
        let mut rhs = false;
        let mut seen = std::collections::HashSet::new();
        for tag in &witness.rows {
            if !seen.insert(tag) {
                return false;
            }
            let Some(row) = by_tag.get(tag) else {
                return false;
            };
            lhs.symmetric_difference_with(&row.lhs);
            rhs ^= row.rhs;
        }
        lhs.is_clear() && rhs
    }
}

/// Evaluates every row of the system for `g` under `beta` and returns the
/// violated tags, in row order. Empty means `beta` is a solution.
pub fn verify(g: &Graph, beta: &NajiAssignment) -> Result<Vec<RowTag>, NajiError> {
    if beta.graph() != g {
        return Err(NajiError::GraphMismatch);
    }
    let sys = build_system(g);
    let mut violated = Vec::new();
    for row in &sys.rows {
        if !sys.eval_row(row, beta)? {
            violated.push(row.tag.clone());
        }
    }
    Ok(violated)
}

/// A value in GF(2) for every ordered pair of distinct vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NajiAssignment {
    graph: Graph,
    values: BTreeMap<(String, String), bool>,
}

impl NajiAssignment {
    /// Wraps a value map, checking it is defined on exactly the ordered pairs
    /// of distinct vertices of `graph`.
    pub fn from_values(
        graph: Graph,
        values: BTreeMap<(String, String), bool>,
    ) -> Result<NajiAssignment, NajiError> {
        for (u, v) in values.keys() {
            if u == v || !graph.contains(u) || !graph.contains(v) {
                return Err(NajiError::UnknownPair(u.clone(), v.clone()));
            }
        }
        if let Some((u, v)) = first_missing_pair(&graph, &values) {
            return Err(NajiError::UnknownPair(u, v));
        }
        Ok(NajiAssignment { graph, values })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn get(&self, u: &str, v: &str) -> Result<bool, NajiError> {
        self.values
            .get(&(u.to_string(), v.to_string()))
            .copied()
            .ok_or_else(|| NajiError::UnknownPair(u.to_string(), v.to_string()))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str, bool)> {
        self.values
            .iter()
            .map(|((u, v), &b)| (u.as_str(), v.as_str(), b))
    }

    /// Adds the reorientation offset at `c`: the value of `(u,v)` flips when
    /// `u = c`, or when `v = c` and `uv` is an edge. Solutions stay solutions.
    pub fn reorient(&self, c: &str) -> Result<NajiAssignment, NajiError> {
        if !self.graph.contains(c) {
            return Err(NajiError::Graph(GraphError::UnknownVertex(c.to_string())));
        }
        let values = self
            .values
            .iter()
            .map(|((u, v), &b)| {
                let delta = u == c || (v == c && self.graph.has_edge(u, v));
                ((u.clone(), v.clone()), b ^ delta)
            })
            .collect();
        Ok(NajiAssignment {
            graph: self.graph.clone(),
            values,
        })
    }

    /// Restriction to the subgraph induced on `s`. Restricting a solution
    /// yields a solution of the subgraph's system.
    pub fn restrict(&self, s: &[String]) -> Result<NajiAssignment, NajiError> {
        let sub = self.graph.induced_subgraph(s)?;
        let values = self
            .values
            .iter()
            .filter(|((u, v), _)| sub.contains(u) && sub.contains(v))
            .map(|((u, v), &b)| ((u.clone(), v.clone()), b))
            .collect();
        Ok(NajiAssignment { graph: sub, values })
    }

    /// Parses the text form: one `u v 0|1` line per ordered pair, every pair
    /// of distinct vertices of `g` present exactly once.
    pub fn parse(g: &Graph, text: &str) -> Result<NajiAssignment, NajiError> {
        let mut values = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            if tokens.len() != 3 {
                return Err(NajiError::Parse {
                    line,
                    msg: format!("expected `u v 0|1`, got {} tokens", tokens.len()),
                });
            }
            let (u, v) = (tokens[0], tokens[1]);
            let bit = match tokens[2] {
                "0" => false,
                "1" => true,
                other => {
                    return Err(NajiError::Parse {
                        line,
                        msg: format!("expected 0 or 1, got {other:?}"),
                    })
                }
            };
            if !g.contains(u) || !g.contains(v) {
                return Err(NajiError::Parse {
                    line,
                    msg: format!("unknown vertex in {u} {v}"),
                });
            }
            if u == v {
                return Err(NajiError::Parse {
                    line,
                    msg: format!("pair ({u}, {v}) is not a pair of distinct vertices"),
                });
            }
            if values.insert((u.to_string(), v.to_string()), bit).is_some() {
                return Err(NajiError::Parse {
                    line,
                    msg: format!("pair ({u}, {v}) given twice"),
                });
            }
        }
        Self::from_values(g.clone(), values)
    }

    /// The text form parsed by [`NajiAssignment::parse`], pairs sorted.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for ((u, v), b) in &self.values {
            out.push_str(&format!("{u} {v} {}\n", if *b { 1 } else { 0 }));
        }
        out
    }
}

fn first_missing_pair(
    graph: &Graph,
    values: &BTreeMap<(String, String), bool>,
) -> Option<(String, String)> {
    for u in graph.sorted_vertices() {
        for v in graph.sorted_vertices() {
            if u != v && !values.contains_key(&(u.to_string(), v.to_string())) {
                return Some((u.to_string(), v.to_string()));
            }
        }
    }
    None
}

/// Reads the assignment off an oriented chord diagram: `beta(v, w) = 0` when
/// the head of `w` lies in the clockwise open arc from the head of `v` to its
/// tail ("to the right" of `v`), 1 otherwise. The result always satisfies the
/// system of the diagram's interlacement graph.
pub fn beta_from_diagram(d: &OrientedChordDiagram) -> NajiAssignment {
    let graph = d.interlacement_graph();
    let n = d.tokens().len();
    let chords = d.chords();
    let mut values = BTreeMap::new();
    for &v in &chords {
        let (hv, tv) = d.ends(v).expect("chord present");
        let span = (tv + n - hv) % n;
        for &w in &chords {
            if v == w {
                continue;
            }
            let (hw, _) = d.ends(w).expect("chord present");
            let offset = (hw + n - hv) % n;
            let right = offset < span;
            values.insert((v.to_string(), w.to_string()), !right);
        }
    }
    NajiAssignment { graph, values }
}
