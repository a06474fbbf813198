//! The top-level recognizer: solve the system, try to realize the solution
//! as a diagram, and otherwise find an obstruction, extend one of its splits
//! to the whole graph, recurse on both sides and compose. Either way the
//! result is a certificate an independent checker can validate.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{build_diagram, BuildOutcome, ChordDiagram, DiagramError};
use crate::graph::{Graph, GraphError, Split};
use crate::naji::{
    build_system, InfeasibilityWitness, NajiAssignment, NajiError, RowTag, SolveOutcome,
};
use crate::obstruction::{find_obstruction, Obstruction, ObstructionError};
use crate::split::{compose_split_diagrams, extend_claw_split, extend_k4_split, SplitError};

#[derive(Debug, Error)]
pub enum RecognizerError {
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Naji(#[from] NajiError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Obstruction(#[from] ObstructionError),
    #[error(transparent)]
    Split(#[from] SplitError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "circle")]
    CircleGraph,
    #[serde(rename = "not-circle")]
    NotCircleGraph,
}

/// One obstruction/split step of the recursion, recorded for auditing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEvent {
    /// Vertices of the subgraph the step ran on, sorted.
    pub subgraph: Vec<String>,
    pub obstruction: Obstruction,
    pub split: Split,
    pub crossing_edge: (String, String),
}

/// The recognizer's output: a diagram whose interlacement graph equals the
/// input exactly, or a subset of system rows summing to 0 = 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "dow_string")]
    pub diagram: Option<ChordDiagram>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub infeasible_rows: Option<Vec<RowTag>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<TraceEvent>,
}

mod dow_string {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::diagram::ChordDiagram;

    pub fn serialize<S: Serializer>(d: &Option<ChordDiagram>, ser: S) -> Result<S::Ok, S::Error> {
        d.as_ref().map(|d| d.to_text()).serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<ChordDiagram>, D::Error> {
        let text: Option<String> = Option::deserialize(de)?;
        match text {
            None => Ok(None),
            Some(t) => ChordDiagram::parse(&t)
                .map(Some)
                .map_err(serde::de::Error::custom),
        }
    }
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Certificate, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Decides whether `g` is a circle graph, producing a checkable certificate
/// either way. Deterministic: identical inputs yield identical certificates.
pub fn recognize(g: &Graph) -> Result<Certificate, RecognizerError> {
    let mut trace = Vec::new();
    match recognize_inner(g, &mut trace)? {
        Ok(d) => Ok(Certificate {
            verdict: Verdict::CircleGraph,
            diagram: Some(d.canonical()),
            infeasible_rows: None,
            trace,
        }),
        Err(witness) => Ok(Certificate {
            verdict: Verdict::NotCircleGraph,
            diagram: None,
            infeasible_rows: Some(witness.rows),
            trace,
        }),
    }
}

fn recognize_inner(
    g: &Graph,
    trace: &mut Vec<TraceEvent>,
) -> Result<Result<ChordDiagram, InfeasibilityWitness>, RecognizerError> {
    if g.vertex_count() <= 1 {
        let word: Vec<String> = g
            .vertices()
            .flat_map(|v| [v.to_string(), v.to_string()])
            .collect();
        return Ok(Ok(ChordDiagram::from_word(word)?));
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        // Chords of different components never cross, so the component
        // diagrams sit side by side on one circle.
        let mut word = Vec::new();
        for comp in comps {
            let sub = g.induced_subgraph(&comp)?;
            match recognize_inner(&sub, trace)? {
                Ok(d) => word.extend(d.word().iter().cloned()),
                // A component's witness cites rows that also belong to the
                // whole graph's system, so it certifies the whole graph.
                Err(w) => return Ok(Err(w)),
            }
        }
        return Ok(Ok(ChordDiagram::from_word(word)?));
    }
    match build_system(g).solve() {
        SolveOutcome::Infeasible(w) => Ok(Err(w)),
        SolveOutcome::Solution(beta) => Ok(Ok(diagram_for_solution(g, &beta, trace)?)),
    }
}

/// Realizes any solution of a connected graph's system as a chord diagram.
/// Chordal solutions build directly; non-chordal ones route through an
/// obstruction, a split, and recursion on both sides. The resulting diagram
/// realizes the graph, though not necessarily the given solution.
pub fn diagram_for_solution(
    g: &Graph,
    beta: &NajiAssignment,
    trace: &mut Vec<TraceEvent>,
) -> Result<ChordDiagram, RecognizerError> {
    match build_diagram(g, beta)? {
        BuildOutcome::Diagram(d) => Ok(d.unoriented()),
        BuildOutcome::NonChordal { .. } => {
            let obs = find_obstruction(g, beta)?;
            let seed = canonical_obstruction_split(&obs);
            let split = match &obs {
                Obstruction::Claw { .. } => extend_claw_split(g, beta, &obs, &seed)?,
                Obstruction::K4 { .. } => extend_k4_split(g, beta, &obs, &seed)?,
            };
            let (ex, ey) = least_crossing_edge(g, &split)?;
            let mut subgraph: Vec<String> = g.vertices().map(|v| v.to_string()).collect();
            subgraph.sort();
            trace.push(TraceEvent {
                subgraph,
                obstruction: obs,
                split: split.clone(),
                crossing_edge: (ex.clone(), ey.clone()),
            });
            let mut left = split.side_x.clone();
            left.push(ey.clone());
            let mut right = split.side_y.clone();
            right.push(ex.clone());
            let g1 = g.induced_subgraph(&left)?;
            let g2 = g.induced_subgraph(&right)?;
            // Both sides are strictly smaller and inherit restricted
            // solutions, so they must come back positive.
            let d1 = recognize_inner(&g1, trace)?.map_err(|_| {
                RecognizerError::Internal("split side reported an infeasible system".into())
            })?;
            let d2 = recognize_inner(&g2, trace)?.map_err(|_| {
                RecognizerError::Internal("split side reported an infeasible system".into())
            })?;
            Ok(compose_split_diagrams(&d1, &d2, &ex, &ey)?)
        }
    }
}

/// The canonical split of an obstruction: for a claw `(x; a, b, c)` with
/// leaves sorted, `({a, b}, {x, c})`; for a K4 with vertices sorted,
/// `({a, b}, {c, d})`.
fn canonical_obstruction_split(obs: &Obstruction) -> Split {
    match obs {
        Obstruction::Claw { center, leaves } => {
            let mut ls = leaves.to_vec();
            ls.sort();
            Split::new(
                vec![ls[0].clone(), ls[1].clone()],
                vec![center.clone(), ls[2].clone()],
            )
        }
        Obstruction::K4 { vertices } => {
            let mut vs = vertices.to_vec();
            vs.sort();
            Split::new(vs[..2].to_vec(), vs[2..].to_vec())
        }
    }
}

/// Lexicographically least crossing edge `(x, y)` with `x` on the split's
/// first side.
fn least_crossing_edge(g: &Graph, split: &Split) -> Result<(String, String), RecognizerError> {
    for x in &split.side_x {
        for y in g.neighbors(x)? {
            if split.side_y.iter().any(|v| v == y) {
                return Ok((x.clone(), y.to_string()));
            }
        }
    }
    Err(RecognizerError::Internal(
        "split has no crossing edge in a connected graph".into(),
    ))
}

/// Independent audit of a certificate: positive certificates must realize
/// the graph exactly; negative ones must cite rows of a freshly built system
/// that sum to 0 = 1. Any mismatch returns false.
pub fn check_certificate(g: &Graph, cert: &Certificate) -> bool {
    match cert.verdict {
        Verdict::CircleGraph => match (&cert.diagram, &cert.infeasible_rows) {
            (Some(d), None) => d.interlacement_graph() == *g,
            _ => false,
        },
        Verdict::NotCircleGraph => match (&cert.diagram, &cert.infeasible_rows) {
            (None, Some(rows)) => {
                let witness = InfeasibilityWitness { rows: rows.clone() };
                build_system(g).check_witness(&witness)
            }
            _ => false,
        },
    }
}
