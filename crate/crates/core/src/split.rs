//! Extending a split of a 4-vertex obstruction to a split of the whole graph,
//! and composing chord diagrams across a split.
//!
//! The claw extender takes the common neighborhood of the three leaves and
//! collects components; the K4 extender grows maximal disjoint quadruple sets
//! whose cross-selections all stay obstructions, then routes the remaining
//! components by which set they touch. Both validate the construction's
//! in-proof claims as internal errors.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::diagram::{ChordDiagram, DiagramError};
use crate::graph::{Graph, GraphError, Split};
use crate::naji::{NajiAssignment, NajiError};
use crate::obstruction::{is_claw_obstruction, is_k4_obstruction, Obstruction, ObstructionError};

#[derive(Debug, Error)]
pub enum SplitError {
    #[error("not the expected obstruction kind: {0}")]
    BadObstruction(String),
    #[error("invalid obstruction split: {0}")]
    BadSplit(String),
    #[error("diagram composition: {0}")]
    BadComposition(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Naji(#[from] NajiError),
    #[error(transparent)]
    Obstruction(#[from] ObstructionError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

fn component_of<'a>(comps: &'a [Vec<String>], v: &str) -> Option<&'a Vec<String>> {
    comps.iter().find(|c| c.iter().any(|u| u == v))
}

/// Extends a split of a claw-obstruction `(x; a, b, c)` to a split of `g`.
/// The split of the claw is relabeled so it reads `({a, b}, {x, c})`; the
/// result is `(X_a ∪ X_b, rest)` where `X_a`, `X_b` are the components of
/// `G - (N(a) ∩ N(b) ∩ N(c))` containing `a` and `b`.
pub fn extend_claw_split(
    g: &Graph,
    beta: &NajiAssignment,
    obs: &Obstruction,
    split_of_h: &Split,
) -> Result<Split, SplitError> {
    let (center, leaves) = match obs {
        Obstruction::Claw { center, leaves } => (center.as_str(), leaves),
        Obstruction::K4 { .. } => {
            return Err(SplitError::BadObstruction(
                "expected a claw-obstruction".into(),
            ))
        }
    };
    if !is_claw_obstruction(g, beta, center, &leaves[0], &leaves[1], &leaves[2])? {
        return Err(SplitError::BadObstruction(
            "claw restriction is chordal, not an obstruction".into(),
        ));
    }
    // Relabel: the side containing the center is {x, c}; the other is {a, b}.
    let obs_set: BTreeSet<&str> = obs.vertices().into_iter().collect();
    let split_set: BTreeSet<&str> = split_of_h
        .side_x
        .iter()
        .chain(split_of_h.side_y.iter())
        .map(|s| s.as_str())
        .collect();
    if obs_set != split_set || split_of_h.side_x.len() != 2 || split_of_h.side_y.len() != 2 {
        return Err(SplitError::BadSplit(
            "split must partition the obstruction's vertices into pairs".into(),
        ));
    }
    let (center_side, leaf_side) = if split_of_h.side_x.iter().any(|v| v == center) {
        (&split_of_h.side_x, &split_of_h.side_y)
    } else {
        (&split_of_h.side_y, &split_of_h.side_x)
    };
    let c = center_side
        .iter()
        .find(|v| v.as_str() != center)
        .expect("pair side has a partner");
    let (a, b) = (&leaf_side[0], &leaf_side[1]);

    let na: BTreeSet<&str> = g.neighbors(a)?.into_iter().collect();
    let nb: BTreeSet<&str> = g.neighbors(b)?.into_iter().collect();
    let nc: BTreeSet<&str> = g.neighbors(c)?.into_iter().collect();
    let common: BTreeSet<&str> = na
        .intersection(&nb)
        .copied()
        .collect::<BTreeSet<_>>()
        .intersection(&nc)
        .copied()
        .collect();
    let rest: Vec<String> = g
        .vertices()
        .filter(|v| !common.contains(v))
        .map(|v| v.to_string())
        .collect();
    let comps = g.induced_subgraph(&rest)?.connected_components();
    let comp_a = component_of(&comps, a)
        .ok_or_else(|| SplitError::Internal("leaf missing from components".into()))?;
    let comp_b = component_of(&comps, b)
        .ok_or_else(|| SplitError::Internal("leaf missing from components".into()))?;
    let comp_c = component_of(&comps, c)
        .ok_or_else(|| SplitError::Internal("leaf missing from components".into()))?;
    if comp_a == comp_b || comp_a == comp_c || comp_b == comp_c {
        return Err(SplitError::Internal(
            "claw leaves are not in distinct components of G - X".into(),
        ));
    }
    // Every component vertex adjacent to the common neighborhood must see all
    // of it.
    for comp in [comp_a, comp_b, comp_c] {
        for d in comp {
            let nd: BTreeSet<&str> = g.neighbors(d)?.into_iter().collect();
            if common.iter().any(|u| nd.contains(u)) && !common.is_subset(&nd) {
                return Err(SplitError::Internal(format!(
                    "{d:?} sees part of the common neighborhood but not all of it"
                )));
            }
        }
    }
    let mut side_a: Vec<String> = comp_a.clone();
    side_a.extend(comp_b.iter().cloned());
    let side_b: Vec<String> = g
        .vertices()
        .filter(|v| !side_a.iter().any(|u| u == v))
        .map(|v| v.to_string())
        .collect();
    let result = Split::new(side_a, side_b);
    if !g.is_split(&result.side_x, &result.side_y) {
        return Err(SplitError::Internal(
            "extended claw split failed validation".into(),
        ));
    }
    for v in [a, b] {
        if !result.side_x.contains(v) {
            return Err(SplitError::Internal(
                "split does not contain its seed side".into(),
            ));
        }
    }
    Ok(result)
}

/// Maximal disjoint vertex sets grown from a K4-obstruction, one per
/// obstruction vertex, such that every cross-selection is a K4-obstruction;
/// plus the dominators: outside vertices adjacent to all of the union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadrupleSets {
    pub slots: [Vec<String>; 4],
    pub dominators: Vec<String>,
}

impl QuadrupleSets {
    pub fn union(&self) -> Vec<String> {
        let mut all: Vec<String> = self.slots.iter().flatten().cloned().collect();
        all.sort();
        all
    }

    pub fn slot_of(&self, v: &str) -> Option<usize> {
        self.slots.iter().position(|s| s.iter().any(|u| u == v))
    }
}

fn quad_is_obstruction(
    g: &Graph,
    beta: &NajiAssignment,
    quad: [&str; 4],
) -> Result<bool, SplitError> {
    let all_edges = (0..4).all(|i| ((i + 1)..4).all(|j| g.has_edge(quad[i], quad[j])));
    if !all_edges {
        return Ok(false);
    }
    Ok(is_k4_obstruction(
        g, beta, quad[0], quad[1], quad[2], quad[3],
    )?)
}

fn addable_to_slot(
    g: &Graph,
    beta: &NajiAssignment,
    slots: &[Vec<String>; 4],
    t: usize,
    v: &str,
) -> Result<bool, SplitError> {
    let others: Vec<usize> = (0..4).filter(|&i| i != t).collect();
    for p in &slots[others[0]] {
        for q in &slots[others[1]] {
            for r in &slots[others[2]] {
                if !quad_is_obstruction(g, beta, [v, p, q, r])? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Greedy fixpoint from the obstruction's singletons: scan vertices in label
/// order and put each into the first slot whose cross-selections all remain
/// K4-obstructions, until stable.
pub fn maximal_quadruple_sets(
    g: &Graph,
    beta: &NajiAssignment,
    obs: &Obstruction,
) -> Result<QuadrupleSets, SplitError> {
    let seed = match obs {
        Obstruction::K4 { vertices } => vertices,
        Obstruction::Claw { .. } => {
            return Err(SplitError::BadObstruction(
                "expected a K4-obstruction".into(),
            ))
        }
    };
    let mut seed: Vec<String> = seed.to_vec();
    seed.sort();
    if !is_k4_obstruction(g, beta, &seed[0], &seed[1], &seed[2], &seed[3])? {
        return Err(SplitError::BadObstruction(
            "K4 restriction is chordal, not an obstruction".into(),
        ));
    }
    let mut slots: [Vec<String>; 4] = [
        vec![seed[0].clone()],
        vec![seed[1].clone()],
        vec![seed[2].clone()],
        vec![seed[3].clone()],
    ];
    loop {
        let mut changed = false;
        let in_x: BTreeSet<String> = slots.iter().flatten().cloned().collect();
        for v in g.sorted_vertices() {
            if in_x.contains(v) || slots.iter().any(|s| s.iter().any(|u| u == v)) {
                continue;
            }
            for t in 0..4 {
                if addable_to_slot(g, beta, &slots, t, v)? {
                    slots[t].push(v.to_string());
                    changed = true;
                    break;
                }
            }
        }
        if !changed {
            break;
        }
    }
    for s in &mut slots {
        s.sort();
    }
    let union: BTreeSet<&String> = slots.iter().flatten().collect();
    let mut dominators = Vec::new();
    for v in g.sorted_vertices() {
        if union.iter().any(|u| u.as_str() == v) {
            continue;
        }
        let nv: BTreeSet<&str> = g.neighbors(v)?.into_iter().collect();
        if union.iter().all(|u| nv.contains(u.as_str())) {
            dominators.push(v.to_string());
        }
    }
    let q = QuadrupleSets { slots, dominators };
    // Every vertex outside the union and the dominators touches at most one
    // slot.
    for v in g.sorted_vertices() {
        if q.slot_of(v).is_some() || q.dominators.iter().any(|u| u == v) {
            continue;
        }
        let touched = q
            .slots
            .iter()
            .filter(|s| s.iter().any(|u| g.has_edge(u, v)))
            .count();
        if touched > 1 {
            return Err(SplitError::Internal(format!(
                "{v:?} has neighbors in {touched} quadruple sets but does not dominate"
            )));
        }
    }
    Ok(q)
}

/// Extends a split of a K4-obstruction to a split of `g`: the quadruple sets
/// of the split's side, together with the components of the remainder that
/// touch them.
pub fn extend_k4_split(
    g: &Graph,
    beta: &NajiAssignment,
    obs: &Obstruction,
    split_of_h: &Split,
) -> Result<Split, SplitError> {
    let q = maximal_quadruple_sets(g, beta, obs)?;
    let obs_set: BTreeSet<&str> = obs.vertices().into_iter().collect();
    let split_set: BTreeSet<&str> = split_of_h
        .side_x
        .iter()
        .chain(split_of_h.side_y.iter())
        .map(|s| s.as_str())
        .collect();
    if obs_set != split_set || split_of_h.side_x.len() != 2 || split_of_h.side_y.len() != 2 {
        return Err(SplitError::BadSplit(
            "split must partition the obstruction's vertices into pairs".into(),
        ));
    }
    let a_slots: Vec<usize> = split_of_h
        .side_x
        .iter()
        .map(|v| {
            q.slot_of(v)
                .ok_or_else(|| SplitError::Internal("seed vertex missing from its slot".into()))
        })
        .collect::<Result<_, _>>()?;
    let x_union = q.union();
    let y_set = &q.dominators;
    let outside: Vec<String> = g
        .vertices()
        .filter(|v| !x_union.iter().any(|u| u == v) && !y_set.iter().any(|u| u == v))
        .map(|v| v.to_string())
        .collect();
    let comps = g.induced_subgraph(&outside)?.connected_components();
    let mut side_a: Vec<String> = a_slots
        .iter()
        .flat_map(|&t| q.slots[t].iter().cloned())
        .collect();
    for comp in &comps {
        // Each component touches at most one of (dominators, slot 0..4).
        let mut touched: Vec<String> = Vec::new();
        for (name, set) in std::iter::once(("Y".to_string(), y_set)).chain(
            q.slots
                .iter()
                .enumerate()
                .map(|(i, s)| (format!("slot {i}"), s)),
        ) {
            if comp.iter().any(|v| set.iter().any(|u| g.has_edge(u, v))) {
                touched.push(name);
            }
        }
        if touched.len() > 1 {
            return Err(SplitError::Internal(format!(
                "a component of the remainder touches {touched:?}"
            )));
        }
        let joins_a = comp.iter().any(|v| {
            a_slots
                .iter()
                .any(|&t| q.slots[t].iter().any(|u| g.has_edge(u, v)))
        });
        if joins_a {
            side_a.extend(comp.iter().cloned());
        }
    }
    let side_b: Vec<String> = g
        .vertices()
        .filter(|v| !side_a.iter().any(|u| u == v))
        .map(|v| v.to_string())
        .collect();
    let result = Split::new(side_a, side_b);
    if !g.is_split(&result.side_x, &result.side_y) {
        return Err(SplitError::Internal(
            "extended K4 split failed validation".into(),
        ));
    }
    for v in &split_of_h.side_x {
        if !result.side_x.contains(v) {
            return Err(SplitError::Internal(
                "split does not contain its seed side".into(),
            ));
        }
    }
    Ok(result)
}

/// Composes two diagrams across a split: `d1` realizes one side plus the
/// marker chord `y`, `d2` the other side plus the marker `x`, where `xy` is a
/// crossing edge of the split. Cutting each circle at its marker gives arcs
/// `S1, S2` and `T1, T2`; the output is whichever interleaving of those arcs
/// realizes the composed graph (at least one does).
pub fn compose_split_diagrams(
    d1: &ChordDiagram,
    d2: &ChordDiagram,
    x: &str,
    y: &str,
) -> Result<ChordDiagram, SplitError> {
    let s_side: BTreeSet<&str> = d1.chords().into_iter().filter(|&v| v != y).collect();
    let t_side: BTreeSet<&str> = d2.chords().into_iter().filter(|&v| v != x).collect();
    if !d1.chords().contains(&y) {
        return Err(SplitError::BadComposition(format!(
            "{y:?} is not a chord of d1"
        )));
    }
    if !d2.chords().contains(&x) {
        return Err(SplitError::BadComposition(format!(
            "{x:?} is not a chord of d2"
        )));
    }
    if !s_side.is_disjoint(&t_side) {
        return Err(SplitError::BadComposition(
            "chord names of the two sides must be disjoint".into(),
        ));
    }
    let (s1, s2) = cut_at(d1, y);
    let (t1, t2) = cut_at(d2, x);

    // Target: both sides' own crossings, plus complete bipartite crossings
    // between the markers' neighborhoods.
    let g1 = d1.interlacement_graph();
    let g2 = d2.interlacement_graph();
    let mut vertices: Vec<&str> = s_side.iter().copied().collect();
    vertices.extend(t_side.iter().copied());
    let mut edges: Vec<(&str, &str)> = Vec::new();
    for (u, v) in g1.edges() {
        if u != y && v != y {
            edges.push((leak(&vertices, &u), leak(&vertices, &v)));
        }
    }
    for (u, v) in g2.edges() {
        if u != x && v != x {
            edges.push((leak(&vertices, &u), leak(&vertices, &v)));
        }
    }
    let by: Vec<String> = g1.neighbors(y)?.iter().map(|s| s.to_string()).collect();
    let bx: Vec<String> = g2.neighbors(x)?.iter().map(|s| s.to_string()).collect();
    for u in &by {
        for v in &bx {
            edges.push((leak(&vertices, u), leak(&vertices, v)));
        }
    }
    let target = Graph::new(&vertices, &edges)?;

    for (first, second) in [(&t1, &t2), (&t2, &t1)] {
        let mut word = s1.clone();
        word.extend(first.iter().cloned());
        word.extend(s2.iter().cloned());
        word.extend(second.iter().cloned());
        let candidate = ChordDiagram::from_word(word)?;
        if candidate.interlacement_graph() == target {
            return Ok(candidate);
        }
    }
    Err(SplitError::Internal(
        "neither interleaving realizes the composed graph".into(),
    ))
}

// Borrow a &str with the lifetime of the vertex list it came from.
fn leak<'a>(vertices: &[&'a str], v: &str) -> &'a str {
    vertices
        .iter()
        .copied()
        .find(|&u| u == v)
        .expect("vertex present")
}

fn cut_at(d: &ChordDiagram, marker: &str) -> (Vec<String>, Vec<String>) {
    let pos: Vec<usize> = d
        .word()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.as_str() == marker)
        .map(|(i, _)| i)
        .collect();
    let (p1, p2) = (pos[0], pos[1]);
    let first = d.word()[p1 + 1..p2].to_vec();
    let mut second = d.word()[p2 + 1..].to_vec();
    second.extend_from_slice(&d.word()[..p1]);
    (first, second)
}
