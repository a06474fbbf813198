//! Obstruction detection: 4-vertex induced subgraphs (a claw or a K4) on
//! which the restricted solution is not chordal, found by an exhaustive scan
//! with closed-form per-kind tests. Also the standalone minimal-cover routine
//! for closed arcs on a discretized circle.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::naji::{NajiAssignment, NajiError};

#[derive(Debug, Error)]
pub enum ObstructionError {
    #[error("vertices {0:?} do not induce a claw with the given center")]
    NotAClaw(Vec<String>),
    #[error("vertices {0:?} do not induce a K4")]
    NotAK4(Vec<String>),
    #[error("NS1 violated on edge ({0}, {1}): orientation undefined")]
    Ns1Violated(String, String),
    #[error("assignment is not a solution; violated row {0}")]
    NotASolution(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("arcs do not cover the circle: point {0} uncovered")]
    NotACover(usize),
    #[error("arc {0:?} is invalid on a circle of {1} points")]
    BadArc(CircleArc, usize),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Naji(#[from] NajiError),
}

/// A 4-vertex obstruction: an induced claw or K4 whose restricted solution
/// is not chordal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Obstruction {
    Claw { center: String, leaves: [String; 3] },
    K4 { vertices: [String; 4] },
}

impl Obstruction {
    pub fn vertices(&self) -> Vec<&str> {
        match self {
            Obstruction::Claw { center, leaves } => {
                let mut v = vec![center.as_str()];
                v.extend(leaves.iter().map(|s| s.as_str()));
                v
            }
            Obstruction::K4 { vertices } => vertices.iter().map(|s| s.as_str()).collect(),
        }
    }
}

/// The orientation a solution induces on the edges: `v` is the head of `uv`
/// exactly when `beta(u, v) = 1`.
#[derive(Clone, Debug)]
pub struct Orientation {
    heads: std::collections::BTreeMap<(String, String), String>,
}

impl Orientation {
    /// Head of the edge `uv`, independent of argument order.
    pub fn head_of(&self, u: &str, v: &str) -> Option<&str> {
        let key = if u < v {
            (u.to_string(), v.to_string())
        } else {
            (v.to_string(), u.to_string())
        };
        self.heads.get(&key).map(|s| s.as_str())
    }

    pub fn is_forward(&self, from: &str, to: &str) -> Option<bool> {
        self.head_of(from, to).map(|h| h == to)
    }

    pub fn edge_count(&self) -> usize {
        self.heads.len()
    }
}

pub fn orientation_of(g: &Graph, beta: &NajiAssignment) -> Result<Orientation, ObstructionError> {
    if beta.graph() != g {
        return Err(ObstructionError::Naji(NajiError::GraphMismatch));
    }
    let mut heads = std::collections::BTreeMap::new();
    for (u, v) in g.edges() {
        let uv = beta.get(&u, &v)?;
        let vu = beta.get(&v, &u)?;
        if uv == vu {
            return Err(ObstructionError::Ns1Violated(u, v));
        }
        let head = if uv { v.clone() } else { u.clone() };
        heads.insert((u, v), head);
    }
    Ok(Orientation { heads })
}

fn check_claw(g: &Graph, x: &str, a: &str, b: &str, c: &str) -> Result<(), ObstructionError> {
    let all = [x, a, b, c];
    let distinct: BTreeSet<&str> = all.iter().copied().collect();
    let induced_claw = distinct.len() == 4
        && all.iter().all(|v| g.contains(v))
        && g.has_edge(x, a)
        && g.has_edge(x, b)
        && g.has_edge(x, c)
        && !g.has_edge(a, b)
        && !g.has_edge(a, c)
        && !g.has_edge(b, c);
    if induced_claw {
        Ok(())
    } else {
        Err(ObstructionError::NotAClaw(
            all.iter().map(|s| s.to_string()).collect(),
        ))
    }
}

/// Claw test: the restriction is non-chordal exactly when all three leaf sums
/// `beta(a,b)+beta(a,c)`, `beta(b,a)+beta(b,c)`, `beta(c,a)+beta(c,b)` are 1.
/// (For a solution the only alternative is exactly one sum being 1, which is
/// the chordal pattern: one chord separating the other two.)
pub fn is_claw_obstruction(
    g: &Graph,
    beta: &NajiAssignment,
    x: &str,
    a: &str,
    b: &str,
    c: &str,
) -> Result<bool, ObstructionError> {
    check_claw(g, x, a, b, c)?;
    let s_a = beta.get(a, b)? ^ beta.get(a, c)?;
    let s_b = beta.get(b, a)? ^ beta.get(b, c)?;
    let s_c = beta.get(c, a)? ^ beta.get(c, b)?;
    Ok(s_a && s_b && s_c)
}

fn check_k4(g: &Graph, vs: [&str; 4]) -> Result<(), ObstructionError> {
    let distinct: BTreeSet<&str> = vs.iter().copied().collect();
    let ok = distinct.len() == 4
        && vs.iter().all(|v| g.contains(v))
        && (0..4).all(|i| (i + 1..4).all(|j| g.has_edge(vs[i], vs[j])));
    if ok {
        Ok(())
    } else {
        Err(ObstructionError::NotAK4(
            vs.iter().map(|s| s.to_string()).collect(),
        ))
    }
}

fn cycle_is_odd(beta: &NajiAssignment, cycle: [&str; 4]) -> Result<bool, NajiError> {
    let [p, q, r, s] = cycle;
    Ok(beta.get(p, q)? ^ beta.get(q, r)? ^ beta.get(r, s)? ^ beta.get(s, p)?)
}

/// K4 test: the restriction is non-chordal exactly when all three 4-cycles
/// are odd in the induced orientation (an odd number of forward arcs).
pub fn is_k4_obstruction(
    g: &Graph,
    beta: &NajiAssignment,
    a: &str,
    b: &str,
    c: &str,
    d: &str,
) -> Result<bool, ObstructionError> {
    check_k4(g, [a, b, c, d])?;
    Ok(cycle_is_odd(beta, [a, b, c, d])?
        && cycle_is_odd(beta, [a, b, d, c])?
        && cycle_is_odd(beta, [a, c, b, d])?)
}

/// Exhaustive scan over 4-subsets in lexicographic vertex order, returning
/// the least obstruction. A connected graph with a non-chordal solution
/// always contains one, so an empty scan is an internal error.
pub fn find_obstruction(g: &Graph, beta: &NajiAssignment) -> Result<Obstruction, ObstructionError> {
    if !g.is_connected() {
        return Err(ObstructionError::NotConnected);
    }
    let violations = crate::naji::verify(g, beta)?;
    if let Some(tag) = violations.first() {
        return Err(ObstructionError::NotASolution(tag.to_string()));
    }
    let vs = g.sorted_vertices();
    let n = vs.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let quad = [vs[i], vs[j], vs[k], vs[l]];
                    if let Some(obs) = classify_quad(g, beta, quad)? {
                        return Ok(obs);
                    }
                }
            }
        }
    }
    Err(ObstructionError::Internal(
        "no obstruction found for a non-chordal solution".into(),
    ))
}

fn classify_quad(
    g: &Graph,
    beta: &NajiAssignment,
    quad: [&str; 4],
) -> Result<Option<Obstruction>, ObstructionError> {
    let edges: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| ((i + 1)..4).map(move |j| (i, j)))
        .filter(|&(i, j)| g.has_edge(quad[i], quad[j]))
        .collect();
    match edges.len() {
        6 => {
            if is_k4_obstruction(g, beta, quad[0], quad[1], quad[2], quad[3])? {
                let vertices = quad.map(|s| s.to_string());
                return Ok(Some(Obstruction::K4 { vertices }));
            }
        }
        3 => {
            // A claw is the unique 3-edge graph on 4 vertices with a degree-3
            // vertex.
            for center in 0..4 {
                if edges.iter().all(|&(i, j)| i == center || j == center) {
                    let leaves: Vec<&str> =
                        (0..4).filter(|&i| i != center).map(|i| quad[i]).collect();
                    if is_claw_obstruction(g, beta, quad[center], leaves[0], leaves[1], leaves[2])?
                    {
                        return Ok(Some(Obstruction::Claw {
                            center: quad[center].to_string(),
                            leaves: [
                                leaves[0].to_string(),
                                leaves[1].to_string(),
                                leaves[2].to_string(),
                            ],
                        }));
                    }
                    break;
                }
            }
        }
        _ => {}
    }
    Ok(None)
}

/// A closed arc on a circle of `n` points: covers `len` consecutive points
/// clockwise starting at `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircleArc {
    pub start: usize,
    pub len: usize,
}

impl CircleArc {
    pub fn new(start: usize, len: usize) -> CircleArc {
        CircleArc { start, len }
    }

    /// Arc from `start` to `end` inclusive (clockwise) on a circle of `n`
    /// points.
    pub fn from_bounds(start: usize, end: usize, n: usize) -> CircleArc {
        CircleArc {
            start,
            len: (end + n - start) % n + 1,
        }
    }

    pub fn contains(&self, p: usize, n: usize) -> bool {
        (p + n - self.start) % n < self.len
    }

    pub fn points(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).map(move |k| (self.start + k) % n)
    }

    pub fn end(&self, n: usize) -> usize {
        (self.start + self.len - 1) % n
    }
}

/// Closed arcs touch when they share a point or abut: a shared boundary
/// between point `i` and point `i+1` counts, matching closed arcs of a
/// continuous circle whose points are unit segments.
pub fn arcs_touch(a: &CircleArc, b: &CircleArc, n: usize) -> bool {
    if a.len == n || b.len == n {
        return true;
    }
    a.points(n).any(|p| b.contains(p, n))
        || b.start == (a.start + a.len) % n
        || a.start == (b.start + b.len) % n
}

/// A cyclic sequence of arcs in which consecutive arcs intersect, all other
/// pairs are disjoint, and the union covers the circle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicArcSequence {
    pub circle: usize,
    pub arcs: Vec<CircleArc>,
}

impl CyclicArcSequence {
    /// Checks the three structural conditions literally.
    pub fn conditions_hold(&self) -> bool {
        let n = self.circle;
        let k = self.arcs.len();
        if k == 0 {
            return false;
        }
        let covered = (0..n).all(|p| self.arcs.iter().any(|a| a.contains(p, n)));
        if !covered {
            return false;
        }
        if k == 1 {
            return self.arcs[0].len == n;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                let touch = arcs_touch(&self.arcs[i], &self.arcs[j], n);
                if consecutive != touch {
                    return false;
                }
            }
        }
        true
    }
}

/// Selects a minimum-cardinality subfamily covering the circle and arranges
/// it cyclically so each arc meets exactly its two neighbors. The ordering
/// comes from the runs of points covered by exactly one chosen arc.
pub fn minimal_cover(
    circle: usize,
    arcs: &[CircleArc],
) -> Result<CyclicArcSequence, ObstructionError> {
    for a in arcs {
        if a.len == 0 || a.len > circle || a.start >= circle {
            return Err(ObstructionError::BadArc(*a, circle));
        }
    }
    if let Some(p) = (0..circle).find(|&p| !arcs.iter().any(|a| a.contains(p, circle))) {
        return Err(ObstructionError::NotACover(p));
    }
    // A single arc covering everything wins outright.
    if let Some(a) = arcs.iter().find(|a| a.len == circle) {
        return Ok(CyclicArcSequence {
            circle,
            arcs: vec![*a],
        });
    }
    let chosen = minimum_cover_indices(circle, arcs).ok_or_else(|| {
        ObstructionError::Internal("covering family yielded no greedy cover".into())
    })?;
    let ordered = order_by_unique_runs(circle, arcs, &chosen)?;
    let seq = CyclicArcSequence {
        circle,
        arcs: ordered,
    };
    if !seq.conditions_hold() {
        return Err(ObstructionError::Internal(
            "minimal cover violates the cyclic intersection conditions".into(),
        ));
    }
    Ok(seq)
}

/// Minimum-cardinality circular cover: for each candidate starting arc run
/// the optimal "extend farthest past the frontier" greedy, keep the best.
/// Ties break toward earlier input order, so the result is deterministic.
fn minimum_cover_indices(n: usize, arcs: &[CircleArc]) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    'starts: for (s, sa) in arcs.iter().enumerate() {
        let mut chosen = vec![s];
        // reach = number of points covered clockwise from sa.start
        let mut reach = sa.len;
        while reach < n {
            let frontier = (sa.start + reach) % n;
            let mut pick: Option<(usize, usize)> = None; // (new_reach, index)
            for (i, a) in arcs.iter().enumerate() {
                if !a.contains(frontier, n) {
                    continue;
                }
                // offset of a.start from the origin sa.start
                let rel = (a.start + n - sa.start) % n;
                let ext = if rel <= reach {
                    rel + a.len
                } else {
                    rel + a.len - n
                };
                let ext = ext.min(n);
                if ext > reach && pick.is_none_or(|(e, _)| ext > e) {
                    pick = Some((ext, i));
                }
            }
            match pick {
                Some((ext, i)) => {
                    chosen.push(i);
                    reach = ext;
                }
                None => continue 'starts,
            }
        }
        if best.as_ref().is_none_or(|b| chosen.len() < b.len()) {
            best = Some(chosen);
        }
    }
    best
}

fn order_by_unique_runs(
    n: usize,
    arcs: &[CircleArc],
    chosen: &[usize],
) -> Result<Vec<CircleArc>, ObstructionError> {
    if chosen.len() == 1 {
        return Ok(vec![arcs[chosen[0]]]);
    }
    // owner[p] = the unique chosen arc covering p, when exactly one does.
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for p in 0..n {
        let covering: Vec<usize> = chosen
            .iter()
            .copied()
            .filter(|&i| arcs[i].contains(p, n))
            .collect();
        if covering.len() == 1 {
            owner[p] = Some(covering[0]);
        }
    }
    // Walk the circle once, recording each arc at the first point of its run.
    let mut order: Vec<usize> = Vec::new();
    for p in 0..n {
        if let Some(i) = owner[p] {
            let prev = owner[(p + n - 1) % n];
            if prev != Some(i) && !order.contains(&i) {
                order.push(i);
            }
        }
    }
    if order.len() != chosen.len() {
        return Err(ObstructionError::Internal(format!(
            "{} arcs in minimum cover but {} unique runs",
            chosen.len(),
            order.len()
        )));
    }
    Ok(order.into_iter().map(|i| arcs[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::OrientedChordDiagram;
    use crate::naji::beta_from_diagram;
    use crate::testutil::*;

    #[test]
    fn orientation_of_k2() {
        let g = Graph::new(&["u", "v"], &[("u", "v")]).unwrap();
        let beta = assignment(&g, &[("u", "v", 1), ("v", "u", 0)]);
        let o = orientation_of(&g, &beta).unwrap();
        assert_eq!(o.head_of("u", "v"), Some("v"));
        assert_eq!(o.is_forward("u", "v"), Some(true));
        assert_eq!(o.is_forward("v", "u"), Some(false));
    }

    #[test]
    fn orientation_of_k4_table() {
        let (g, beta) = k4_with_table();
        let o = orientation_of(&g, &beta).unwrap();
        // d beats a, b, c; the rest form the directed triangle a -> b -> c -> a.
        for t in ["a", "b", "c"] {
            assert_eq!(o.is_forward("d", t), Some(true));
        }
        assert_eq!(o.is_forward("a", "b"), Some(true));
        assert_eq!(o.is_forward("b", "c"), Some(true));
        assert_eq!(o.is_forward("c", "a"), Some(true));
    }

    #[test]
    fn orientation_rejects_ns1_violation() {
        let g = Graph::new(&["u", "v"], &[("u", "v")]).unwrap();
        let beta = assignment(&g, &[("u", "v", 1), ("v", "u", 1)]);
        assert!(matches!(
            orientation_of(&g, &beta),
            Err(ObstructionError::Ns1Violated(..))
        ));
    }

    #[test]
    fn reorient_flips_exactly_edges_at_c() {
        let (g, beta) = k4_with_table();
        let o1 = orientation_of(&g, &beta).unwrap();
        let o2 = orientation_of(&g, &beta.reorient("a").unwrap()).unwrap();
        for (u, v) in g.edges() {
            let flipped = o1.head_of(&u, &v) != o2.head_of(&u, &v);
            assert_eq!(flipped, u == "a" || v == "a", "edge ({u},{v})");
        }
    }

    #[test]
    fn claw_table_is_obstruction() {
        let (g, beta) = claw_with_table();
        assert!(is_claw_obstruction(&g, &beta, "x", "a", "b", "c").unwrap());
    }

    #[test]
    fn chordal_claw_solution_is_not_obstruction() {
        // A diagram realizing the claw: x crosses three pairwise nested chords.
        let d = OrientedChordDiagram::parse("x+ a+ b+ c+ x- c- b- a-").unwrap();
        let g = d.interlacement_graph();
        assert_eq!(g, claw());
        let beta = beta_from_diagram(&d);
        assert!(!is_claw_obstruction(&g, &beta, "x", "a", "b", "c").unwrap());
    }

    #[test]
    fn claw_obstruction_survives_reorientation() {
        let (g, beta) = claw_with_table();
        for v in ["a", "b", "c", "x"] {
            let r = beta.reorient(v).unwrap();
            assert!(is_claw_obstruction(&g, &r, "x", "a", "b", "c").unwrap());
        }
    }

    #[test]
    fn claw_test_rejects_non_claw() {
        let (g, beta) = claw_with_table();
        assert!(matches!(
            is_claw_obstruction(&g, &beta, "a", "x", "b", "c"),
            Err(ObstructionError::NotAClaw(_))
        ));
    }

    #[test]
    fn k4_table_is_obstruction() {
        let (g, beta) = k4_with_table();
        assert!(is_k4_obstruction(&g, &beta, "a", "b", "c", "d").unwrap());
    }

    #[test]
    fn chordal_k4_solution_is_not_obstruction() {
        let d = OrientedChordDiagram::parse("a+ b+ c+ d+ a- b- c- d-").unwrap();
        let g = d.interlacement_graph();
        assert_eq!(g, k4());
        let beta = beta_from_diagram(&d);
        assert!(!is_k4_obstruction(&g, &beta, "a", "b", "c", "d").unwrap());
    }

    #[test]
    fn k4_obstruction_survives_reorientation() {
        let (g, beta) = k4_with_table();
        let r = beta.reorient("a").unwrap();
        assert!(is_k4_obstruction(&g, &r, "a", "b", "c", "d").unwrap());
    }

    #[test]
    fn find_obstruction_on_tables() {
        let (g, beta) = claw_with_table();
        assert_eq!(
            find_obstruction(&g, &beta).unwrap(),
            Obstruction::Claw {
                center: "x".into(),
                leaves: ["a".into(), "b".into(), "c".into()]
            }
        );
        let (g, beta) = k4_with_table();
        assert_eq!(
            find_obstruction(&g, &beta).unwrap(),
            Obstruction::K4 {
                vertices: ["a".into(), "b".into(), "c".into(), "d".into()]
            }
        );
    }

    #[test]
    fn find_obstruction_with_pendant_vertex() {
        // Claw plus pendant p on leaf a; pin the table values and solve for
        // the rest.
        let g = Graph::new(
            &["x", "a", "b", "c", "p"],
            &[("x", "a"), ("x", "b"), ("x", "c"), ("a", "p")],
        )
        .unwrap();
        let (_, table) = claw_with_table();
        let pins: Vec<((&str, &str), bool)> = table.pairs().map(|(u, v, b)| ((u, v), b)).collect();
        let beta = crate::naji::build_system(&g)
            .solve_with_pins(&pins)
            .expect("pinned claw extends to the pendant graph");
        assert!(crate::naji::verify(&g, &beta).unwrap().is_empty());
        let obs = find_obstruction(&g, &beta).unwrap();
        assert_eq!(
            obs,
            Obstruction::Claw {
                center: "x".into(),
                leaves: ["a".into(), "b".into(), "c".into()]
            }
        );
        // The restriction to the obstruction really is non-chordal.
        let sub_vs: Vec<String> = obs.vertices().iter().map(|s| s.to_string()).collect();
        let sub = g.induced_subgraph(&sub_vs).unwrap();
        let restricted = beta.restrict(&sub_vs).unwrap();
        assert!(crate::diagram::build_diagram(&sub, &restricted)
            .unwrap()
            .is_non_chordal());
    }

    #[test]
    fn obstruction_status_invariant_under_reorientation_sequences() {
        let mut rng = crate::testutil::rng(0x0B57);
        let (g, beta) = claw_with_table();
        let vertices: Vec<String> = g.vertices().map(|v| v.to_string()).collect();
        for _ in 0..20 {
            let mut b = beta.clone();
            for _ in 0..rand::Rng::random_range(&mut rng, 1..=6) {
                let c = &vertices[rand::Rng::random_range(&mut rng, 0..vertices.len())];
                b = b.reorient(c).unwrap();
            }
            assert!(is_claw_obstruction(&g, &b, "x", "a", "b", "c").unwrap());
        }
        let (g, beta) = k4_with_table();
        let vertices: Vec<String> = g.vertices().map(|v| v.to_string()).collect();
        for _ in 0..20 {
            let mut b = beta.clone();
            for _ in 0..rand::Rng::random_range(&mut rng, 1..=6) {
                let c = &vertices[rand::Rng::random_range(&mut rng, 0..vertices.len())];
                b = b.reorient(c).unwrap();
            }
            assert!(is_k4_obstruction(&g, &b, "a", "b", "c", "d").unwrap());
        }
    }

    // Pin one of the known non-chordal tables into a random connected
    // supergraph on <= 7 vertices; whenever the pinned system stays feasible
    // the solution is non-chordal, and the scan must find an obstruction.
    #[test]
    fn find_obstruction_succeeds_on_pinned_supergraphs() {
        let mut rng = crate::testutil::rng(0x0B58);
        let mut found = 0;
        for trial in 0..60 {
            let (base, table) = if trial % 2 == 0 {
                claw_with_table()
            } else {
                k4_with_table()
            };
            let extra = rand::Rng::random_range(&mut rng, 1..=3);
            let mut labels: Vec<String> = base.vertices().map(|v| v.to_string()).collect();
            let mut edges: Vec<(String, String)> = base.edges();
            for i in 0..extra {
                let name = format!("v{i}");
                // Attach to at least one existing vertex to keep things connected.
                let mut attached = false;
                for existing in labels.clone() {
                    if rand::Rng::random_bool(&mut rng, 0.4) {
                        edges.push((existing.clone(), name.clone()));
                        attached = true;
                    }
                }
                if !attached {
                    edges.push((labels[0].clone(), name.clone()));
                }
                labels.push(name);
            }
            let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
            let edge_refs: Vec<(&str, &str)> = edges
                .iter()
                .map(|(u, v)| (u.as_str(), v.as_str()))
                .collect();
            let g = Graph::new(&refs, &edge_refs).unwrap();
            let pins: Vec<((&str, &str), bool)> =
                table.pairs().map(|(u, v, b)| ((u, v), b)).collect();
            let Some(beta) = crate::naji::build_system(&g).solve_with_pins(&pins) else {
                continue;
            };
            assert!(crate::naji::verify(&g, &beta).unwrap().is_empty());
            if crate::diagram::build_diagram(&g, &beta)
                .unwrap()
                .is_non_chordal()
            {
                find_obstruction(&g, &beta).expect("non-chordal solution has an obstruction");
                found += 1;
            }
        }
        assert!(
            found >= 20,
            "harness produced only {found} non-chordal instances"
        );
    }

    #[test]
    fn obstruction_serialization_shape() {
        let claw = Obstruction::Claw {
            center: "x".into(),
            leaves: ["a".into(), "b".into(), "c".into()],
        };
        assert_eq!(
            serde_json::to_string(&claw).unwrap(),
            r#"{"kind":"Claw","center":"x","leaves":["a","b","c"]}"#
        );
        let k4 = Obstruction::K4 {
            vertices: ["a".into(), "b".into(), "c".into(), "d".into()],
        };
        assert_eq!(
            serde_json::to_string(&k4).unwrap(),
            r#"{"kind":"K4","vertices":["a","b","c","d"]}"#
        );
    }

    fn arc(start: usize, end: usize, n: usize) -> CircleArc {
        CircleArc::from_bounds(start, end, n)
    }

    #[test]
    fn minimal_cover_three_forced_arcs() {
        let arcs = [arc(0, 2, 6), arc(2, 4, 6), arc(4, 0, 6)];
        let seq = minimal_cover(6, &arcs).unwrap();
        assert_eq!(seq.arcs.len(), 3);
        assert!(seq.conditions_hold());
        assert_eq!(seq.arcs, vec![arcs[0], arcs[1], arcs[2]]);
    }

    #[test]
    fn minimal_cover_drops_redundant_arc() {
        let arcs = [arc(0, 2, 6), arc(2, 4, 6), arc(4, 0, 6), arc(1, 2, 6)];
        let seq = minimal_cover(6, &arcs).unwrap();
        assert_eq!(seq.arcs, vec![arcs[0], arcs[1], arcs[2]]);
    }

    #[test]
    fn minimal_cover_two_overlapping_halves() {
        let arcs = [arc(0, 4, 6), arc(3, 1, 6)];
        let seq = minimal_cover(6, &arcs).unwrap();
        assert_eq!(seq.arcs.len(), 2);
        assert!(seq.conditions_hold());
    }

    #[test]
    fn minimal_cover_single_full_arc() {
        let arcs = [arc(2, 1, 6), arc(0, 3, 6)];
        assert_eq!(arcs[0].len, 6);
        let seq = minimal_cover(6, &arcs).unwrap();
        assert_eq!(seq.arcs, vec![arcs[0]]);
        assert!(seq.conditions_hold());
    }

    #[test]
    fn minimal_cover_rejects_non_cover() {
        let arcs = [arc(0, 2, 8), arc(4, 6, 8)];
        assert!(matches!(
            minimal_cover(8, &arcs),
            Err(ObstructionError::NotACover(_))
        ));
    }

    #[test]
    fn minimal_cover_abutting_arcs_touch() {
        // A perfect partition: closed arcs share boundary points on the
        // continuous circle, so the conditions still hold.
        let arcs = [arc(0, 1, 4), arc(2, 3, 4)];
        let seq = minimal_cover(4, &arcs).unwrap();
        assert_eq!(seq.arcs.len(), 2);
        assert!(seq.conditions_hold());
    }
}
