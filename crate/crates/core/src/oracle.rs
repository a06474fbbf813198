//! Brute-force ground truth: enumerate every chord diagram on n labeled
//! chords (perfect matchings of 2n circle positions) and search for one whose
//! interlacement graph matches a given graph up to relabeling.
//!
//! This exists to check the recognizer, not to compete with it: (2n-1)!!
//! matchings at n chords, so the guard caps n at desk scale.

use thiserror::Error;

use crate::diagram::ChordDiagram;
use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("{0} chords exceeds the enumeration guard of {1}; raise the cap explicitly")]
    AboveGuard(usize, usize),
}

pub const ENUMERATION_GUARD: usize = 8;
pub const SEARCH_GUARD: usize = 7;

/// Streams all perfect matchings of `2n` positions as unoriented diagrams,
/// chords labeled "1".."n" in order of their first endpoints. Yields each of
/// the (2n-1)!! matchings exactly once.
pub struct MatchingEnumerator {
    n: usize,
    used: Vec<bool>,
    // Chosen pairs, in order; chord k+1 is the (k+1)-th pair.
    stack: Vec<(usize, usize)>,
    done: bool,
}

impl MatchingEnumerator {
    pub fn new(n: usize) -> Result<MatchingEnumerator, OracleError> {
        if n > ENUMERATION_GUARD {
            return Err(OracleError::AboveGuard(n, ENUMERATION_GUARD));
        }
        Ok(Self::new_unguarded(n))
    }

    /// No size guard; the caller owns the blowup.
    pub fn new_unguarded(n: usize) -> MatchingEnumerator {
        MatchingEnumerator {
            n,
            used: vec![false; 2 * n],
            stack: Vec::new(),
            done: false,
        }
    }

    pub fn chord_count(&self) -> usize {
        self.n
    }

    fn first_free(&self) -> Option<usize> {
        self.used.iter().position(|&u| !u)
    }

    fn free_after(&self, from: usize) -> Option<usize> {
        (from + 1..2 * self.n).find(|&i| !self.used[i])
    }

    /// Extends the partial matching until complete: the smallest free
    /// position pairs with the smallest free position after it.
    fn descend(&mut self) {
        while let Some(first) = self.first_free() {
            self.used[first] = true;
            let second = self
                .free_after(first)
                .expect("even number of free positions");
            self.used[second] = true;
            self.stack.push((first, second));
        }
    }

    /// Pops completed choices, advancing the deepest second-endpoint that can
    /// still move right. Sets `done` when the stack is exhausted.
    fn backtrack(&mut self) {
        while let Some((first, second)) = self.stack.pop() {
            self.used[second] = false;
            if let Some(next) = self.free_after(second) {
                self.used[next] = true;
                self.stack.push((first, next));
                return;
            }
            self.used[first] = false;
        }
        self.done = true;
    }

    fn snapshot(&self) -> ChordDiagram {
        let mut word = vec![String::new(); 2 * self.n];
        for (k, &(a, b)) in self.stack.iter().enumerate() {
            let label = (k + 1).to_string();
            word[a] = label.clone();
            word[b] = label;
        }
        ChordDiagram::from_word(word).expect("matching is a double occurrence word")
    }
}

impl Iterator for MatchingEnumerator {
    type Item = ChordDiagram;

    fn next(&mut self) -> Option<ChordDiagram> {
        if self.done {
            return None;
        }
        self.descend();
        let item = self.snapshot();
        if self.n == 0 {
            self.done = true;
        } else {
            self.backtrack();
        }
        Some(item)
    }
}

/// All unoriented diagrams on `n` chords, guarded at `ENUMERATION_GUARD`.
pub fn enumerate_diagrams(n: usize) -> Result<MatchingEnumerator, OracleError> {
    MatchingEnumerator::new(n)
}

/// Exhaustive search for a diagram realizing `g` exactly: every matching is
/// checked for an interlacement graph isomorphic to `g`, and the first hit is
/// relabeled onto `g`'s vertices. Guarded at `SEARCH_GUARD` vertices.
pub fn oracle_find(g: &Graph) -> Result<Option<ChordDiagram>, OracleError> {
    oracle_find_with_cap(g, SEARCH_GUARD)
}

pub fn oracle_find_with_cap(g: &Graph, cap: usize) -> Result<Option<ChordDiagram>, OracleError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(OracleError::AboveGuard(n, cap));
    }
    if n == 0 {
        return Ok(Some(
            ChordDiagram::from_word(Vec::new()).expect("empty word"),
        ));
    }
    let labels: Vec<&str> = g.sorted_vertices();
    let mut target = vec![0u32; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && g.has_edge(labels[i], labels[j]) {
                target[i] |= 1 << j;
            }
        }
    }
    let mut target_degrees: Vec<u32> = target.iter().map(|r| r.count_ones()).collect();
    target_degrees.sort_unstable();

    for diagram in MatchingEnumerator::new_unguarded(n) {
        let adj = interlacement_rows(&diagram, n);
        let mut degrees: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
        degrees.sort_unstable();
        if degrees != target_degrees {
            continue;
        }
        // Map chord k to a target vertex, consistent with adjacency.
        let mut assign: Vec<usize> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        if extend_isomorphism(&adj, &target, &mut assign, &mut used) {
            let word = diagram
                .word()
                .iter()
                .map(|s| {
                    let chord: usize = s.parse::<usize>().expect("chord labels are 1..n") - 1;
                    labels[assign[chord]].to_string()
                })
                .collect();
            let relabeled = ChordDiagram::from_word(word).expect("relabeling keeps the word valid");
            debug_assert_eq!(&relabeled.interlacement_graph(), g);
            return Ok(Some(relabeled));
        }
    }
    Ok(None)
}

fn interlacement_rows(d: &ChordDiagram, n: usize) -> Vec<u32> {
    let mut pos = vec![(usize::MAX, usize::MAX); n];
    for (i, s) in d.word().iter().enumerate() {
        let k: usize = s.parse::<usize>().expect("chord labels are 1..n") - 1;
        if pos[k].0 == usize::MAX {
            pos[k].0 = i;
        } else {
            pos[k].1 = i;
        }
    }
    let mut rows = vec![0u32; n];
    for i in 0..n {
        for j in i + 1..n {
            let (p1, p2) = pos[i];
            let inside = |x: usize| p1 < x && x < p2;
            if inside(pos[j].0) != inside(pos[j].1) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

/// Depth-first bijection search: chord `assign.len()` takes the least unused
/// target vertex consistent with all earlier choices.
fn extend_isomorphism(
    adj: &[u32],
    target: &[u32],
    assign: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let k = assign.len();
    if k == adj.len() {
        return true;
    }
    for cand in 0..target.len() {
        if used[cand] || adj[k].count_ones() != target[cand].count_ones() {
            continue;
        }
        let consistent = (0..k).all(|prev| {
            let diagram_edge = adj[k] & (1 << prev) != 0;
            let target_edge = target[cand] & (1 << assign[prev]) != 0;
            diagram_edge == target_edge
        });
        if !consistent {
            continue;
        }
        used[cand] = true;
        assign.push(cand);
        if extend_isomorphism(adj, target, assign, used) {
            return true;
        }
        assign.pop();
        used[cand] = false;
    }
    false
}
