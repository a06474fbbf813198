//! Fixtures shared by the unit tests: the named small graphs, the two known
//! non-chordal table assignments, and seeded random diagram generators.

use std::collections::BTreeMap;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{ChordDiagram, EndKind, OrientedChordDiagram, Token};
use crate::graph::Graph;
use crate::naji::{build_system, NajiAssignment, SolveOutcome};

pub fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

pub fn c5() -> Graph {
    Graph::new(
        &["1", "2", "3", "4", "5"],
        &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "1")],
    )
    .unwrap()
}

pub fn k4() -> Graph {
    Graph::new(
        &["a", "b", "c", "d"],
        &[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ],
    )
    .unwrap()
}

pub fn claw() -> Graph {
    Graph::new(&["x", "a", "b", "c"], &[("x", "a"), ("x", "b"), ("x", "c")]).unwrap()
}

/// The 5-wheel: a 5-cycle plus a hub adjacent to every cycle vertex. Not a
/// circle graph.
pub fn w5() -> Graph {
    Graph::new(
        &["0", "1", "2", "3", "4", "5"],
        &[
            ("1", "2"),
            ("2", "3"),
            ("3", "4"),
            ("4", "5"),
            ("5", "1"),
            ("0", "1"),
            ("0", "2"),
            ("0", "3"),
            ("0", "4"),
            ("0", "5"),
        ],
    )
    .unwrap()
}

/// Builds an assignment on all ordered pairs of `g`, taking listed values and
/// filling the rest with 0.
pub fn assignment(g: &Graph, values: &[(&str, &str, u8)]) -> NajiAssignment {
    let mut map = BTreeMap::new();
    for u in g.sorted_vertices() {
        for v in g.sorted_vertices() {
            if u != v {
                map.insert((u.to_string(), v.to_string()), false);
            }
        }
    }
    for (u, v, b) in values {
        let slot = map
            .get_mut(&(u.to_string(), v.to_string()))
            .expect("pair exists");
        *slot = *b != 0;
    }
    NajiAssignment::from_values(g.clone(), map).unwrap()
}

/// The claw with its known non-chordal solution.
pub fn claw_with_table() -> (Graph, NajiAssignment) {
    let g = claw();
    let beta = assignment(
        &g,
        &[
            ("x", "a", 1),
            ("x", "b", 1),
            ("x", "c", 1),
            ("a", "x", 0),
            ("a", "b", 0),
            ("a", "c", 1),
            ("b", "x", 0),
            ("b", "a", 1),
            ("b", "c", 0),
            ("c", "x", 0),
            ("c", "a", 0),
            ("c", "b", 1),
        ],
    );
    (g, beta)
}

/// K4 with its known non-chordal solution.
pub fn k4_with_table() -> (Graph, NajiAssignment) {
    let g = k4();
    let beta = assignment(
        &g,
        &[
            ("a", "b", 1),
            ("a", "c", 0),
            ("a", "d", 0),
            ("b", "a", 0),
            ("b", "c", 1),
            ("b", "d", 0),
            ("c", "a", 1),
            ("c", "b", 0),
            ("c", "d", 0),
            ("d", "a", 1),
            ("d", "b", 1),
            ("d", "c", 1),
        ],
    );
    (g, beta)
}

/// Solves the system of `g`, panicking when infeasible.
pub fn solve_for(g: &Graph) -> NajiAssignment {
    match build_system(g).solve() {
        SolveOutcome::Solution(b) => b,
        SolveOutcome::Infeasible(_) => panic!("expected a feasible system"),
    }
}

/// Orients every chord with its first occurrence as the head.
pub fn orient_head_first(d: &ChordDiagram) -> OrientedChordDiagram {
    let mut seen = std::collections::HashSet::new();
    let tokens = d
        .word()
        .iter()
        .map(|v| {
            let kind = if seen.insert(v.clone()) {
                EndKind::Head
            } else {
                EndKind::Tail
            };
            Token::new(v, kind)
        })
        .collect();
    OrientedChordDiagram::from_tokens(tokens).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly shuffled double occurrence word on chords "1".."n".
pub fn random_word(rng: &mut ChaCha8Rng, n: usize) -> ChordDiagram {
    let mut word: Vec<String> = (1..=n)
        .flat_map(|i| [i.to_string(), i.to_string()])
        .collect();
    word.shuffle(rng);
    ChordDiagram::from_word(word).unwrap()
}

/// Random orientation: each chord's first occurrence is head or tail by coin
/// flip.
pub fn random_orientation(rng: &mut ChaCha8Rng, d: &ChordDiagram) -> OrientedChordDiagram {
    let mut first: std::collections::HashMap<String, EndKind> = Default::default();
    let tokens = d
        .word()
        .iter()
        .map(|v| match first.get(v) {
            None => {
                let kind = if rng.random_bool(0.5) {
                    EndKind::Head
                } else {
                    EndKind::Tail
                };
                first.insert(v.clone(), kind);
                Token::new(v, kind)
            }
            Some(k) => {
                let kind = match k {
                    EndKind::Head => EndKind::Tail,
                    EndKind::Tail => EndKind::Head,
                };
                Token::new(v, kind)
            }
        })
        .collect();
    OrientedChordDiagram::from_tokens(tokens).unwrap()
}

/// A random connected circle graph with its diagram-derived solution.
pub fn random_connected_instance(
    rng: &mut ChaCha8Rng,
    n: usize,
) -> (Graph, NajiAssignment, OrientedChordDiagram) {
    loop {
        let word = random_word(rng, n);
        let d = random_orientation(rng, &word);
        let g = d.interlacement_graph();
        if g.is_connected() {
            let beta = crate::naji::beta_from_diagram(&d);
            return (g, beta, d);
        }
    }
}
