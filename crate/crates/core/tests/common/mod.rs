//! Shared fixtures for the integration suites: the named small graphs, the
//! two known non-chordal tables, seeded random generators, and the labeled
//! graph corpora the oracle comparisons run over.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use circle_core::{
    build_system, ChordDiagram, EndKind, Graph, NajiAssignment, OrientedChordDiagram, SolveOutcome,
    Token,
};

pub fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
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
        *map.get_mut(&(u.to_string(), v.to_string()))
            .expect("pair exists") = *b != 0;
    }
    NajiAssignment::from_values(g.clone(), map).unwrap()
}

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

pub fn solve_for(g: &Graph) -> NajiAssignment {
    match build_system(g).solve() {
        SolveOutcome::Solution(b) => b,
        SolveOutcome::Infeasible(_) => panic!("expected a feasible system"),
    }
}

pub fn pin_and_solve(g: &Graph, table: &NajiAssignment) -> NajiAssignment {
    let pins: Vec<((&str, &str), bool)> = table.pairs().map(|(u, v, b)| ((u, v), b)).collect();
    build_system(g)
        .solve_with_pins(&pins)
        .expect("pinned values extend to the larger graph")
}

pub fn orient_head_first(d: &ChordDiagram) -> OrientedChordDiagram {
    let mut seen = HashSet::new();
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

pub fn random_word(rng: &mut ChaCha8Rng, n: usize) -> ChordDiagram {
    let mut word: Vec<String> = (1..=n)
        .flat_map(|i| [i.to_string(), i.to_string()])
        .collect();
    word.shuffle(rng);
    ChordDiagram::from_word(word).unwrap()
}

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

/// A random connected circle graph together with a diagram realizing it.
pub fn random_connected_instance(
    rng: &mut ChaCha8Rng,
    n: usize,
) -> (Graph, NajiAssignment, OrientedChordDiagram) {
    loop {
        let word = random_word(rng, n);
        let d = random_orientation(rng, &word);
        let g = d.interlacement_graph();
        if g.is_connected() {
            let beta = circle_core::beta_from_diagram(&d);
            return (g, beta, d);
        }
    }
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((refs[i], refs[j]));
            }
        }
    }
    Graph::new(&refs, &edges).unwrap()
}

/// Decodes an edge bitmask over the pairs (i, j), i < j, of `n` labeled
/// vertices "0".."n-1".
pub fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask & (1 << bit) != 0 {
                edges.push((refs[i], refs[j]));
            }
            bit += 1;
        }
    }
    Graph::new(&refs, &edges).unwrap()
}

fn mask_connected(n: usize, mask: u32) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![0u32; n];
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask & (1 << bit) != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    let mut seen = 1u32;
    loop {
        let mut next = seen;
        for v in 0..n {
            if seen & (1 << v) != 0 {
                next |= adj[v];
            }
        }
        if next == seen {
            break;
        }
        seen = next;
    }
    seen.count_ones() as usize == n
}

fn apply_perm(n: usize, mask: u32, perm: &[usize]) -> u32 {
    let bit_of = |i: usize, j: usize| {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        b * (b - 1) / 2 + a
    };
    let mut out = 0u32;
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask & (1 << bit) != 0 {
                out |= 1 << bit_of(perm[i], perm[j]);
            }
            bit += 1;
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

/// One representative per isomorphism class of connected graphs on `n`
/// labeled vertices: walks every labeled graph, expands each unseen one's
/// orbit under vertex permutations, and keeps the orbit minimum.
pub fn connected_classes(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let total_bits = n * (n - 1) / 2;
    let mut seen: HashSet<u32> = HashSet::new();
    let mut reps = Vec::new();
    for mask in 0..(1u32 << total_bits) {
        if seen.contains(&mask) || !mask_connected(n, mask) {
            continue;
        }
        let orbit: HashSet<u32> = perms.iter().map(|p| apply_perm(n, mask, p)).collect();
        let canon = *orbit.iter().min().expect("orbit nonempty");
        seen.extend(orbit);
        reps.push(graph_from_mask(n, canon));
    }
    reps
}
