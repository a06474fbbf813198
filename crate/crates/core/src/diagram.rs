//! Oriented chord diagrams and the machinery for building them one chord at a
//! time: interlacement extraction, feasible head/tail gap computation, chord
//! insertion, and canonical encodings.
//!
//! A diagram is a circular sequence of endpoint tokens read clockwise. Arcs of
//! the circle are represented combinatorially as *gap sets*: gap `i` is the
//! space immediately preceding token `i`, so every open arc bounded by chord
//! ends is exactly a set of gaps and no interval arithmetic is needed.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::naji::{self, NajiAssignment, NajiError};

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("invalid double occurrence word: {0}")]
    InvalidWord(String),
    #[error("invalid token sequence: {0}")]
    InvalidTokens(String),
    #[error("chord {0:?} is already present in the diagram")]
    ChordPresent(String),
    #[error("chord {0:?} is not in the diagram")]
    UnknownChord(String),
    #[error("gap index {0} out of range for a diagram with {1} tokens")]
    GapOutOfRange(usize, usize),
    #[error("head and tail gaps must differ")]
    SameGap,
    #[error("graph is not connected")]
    NotConnected,
    #[error("assignment does not satisfy the system: first violated row {0}")]
    NotASolution(String),
    #[error("assignment is not defined on this graph")]
    AssignmentMismatch,
    #[error("invalid insertion order: {0}")]
    InvalidOrder(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Naji(#[from] NajiError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EndKind {
    Head,
    Tail,
}

/// One chord endpoint on the circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub vertex: String,
    pub kind: EndKind,
}

impl Token {
    pub fn new(vertex: &str, kind: EndKind) -> Token {
        Token {
            vertex: vertex.to_string(),
            kind,
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = match self.kind {
            EndKind::Head => '+',
            EndKind::Tail => '-',
        };
        write!(f, "{}{}", self.vertex, mark)
    }
}

/// An unoriented chord diagram, stored as a double occurrence word: every
/// chord name appears exactly twice around the circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordDiagram {
    word: Vec<String>,
}

impl ChordDiagram {
    pub fn from_word(word: Vec<String>) -> Result<ChordDiagram, DiagramError> {
        let mut counts: HashMap<&str, usize> = HashMap::new();
        for s in &word {
            *counts.entry(s.as_str()).or_default() += 1;
        }
        for (s, c) in counts {
            if c != 2 {
                return Err(DiagramError::InvalidWord(format!(
                    "symbol {s:?} appears {c} times, expected 2"
                )));
            }
        }
        Ok(ChordDiagram { word })
    }

    /// Parses the space-separated text form, e.g. `1 5 2 1 3 2 4 3 5 4`.
    pub fn parse(text: &str) -> Result<ChordDiagram, DiagramError> {
        Self::from_word(text.split_whitespace().map(str::to_string).collect())
    }

    pub fn to_text(&self) -> String {
        self.word.join(" ")
    }

    pub fn word(&self) -> &[String] {
        &self.word
    }

    /// Chord names in first-appearance order.
    pub fn chords(&self) -> Vec<&str> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in &self.word {
            if seen.insert(s.as_str()) {
                out.push(s.as_str());
            }
        }
        out
    }

    pub fn chord_count(&self) -> usize {
        self.word.len() / 2
    }

    pub fn rotated(&self, k: usize) -> ChordDiagram {
        if self.word.is_empty() {
            return self.clone();
        }
        let n = self.word.len();
        let word = (0..n).map(|i| self.word[(i + k) % n].clone()).collect();
        ChordDiagram { word }
    }

    /// The lexicographically least rotation of the word.
    pub fn canonical(&self) -> ChordDiagram {
        let n = self.word.len();
        (0..n.max(1))
            .map(|k| self.rotated(k))
            .min_by(|a, b| a.word.cmp(&b.word))
            .unwrap_or_else(|| self.clone())
    }

    pub fn canonical_text(&self) -> String {
        self.canonical().to_text()
    }

    fn positions(&self) -> HashMap<&str, (usize, usize)> {
        let mut map: HashMap<&str, (usize, usize)> = HashMap::new();
        for (i, s) in self.word.iter().enumerate() {
            map.entry(s.as_str())
                .and_modify(|p| p.1 = i)
                .or_insert((i, i));
        }
        map
    }

    /// The graph whose vertices are the chords, with an edge exactly when two
    /// chords cross (their endpoints alternate around the circle).
    pub fn interlacement_graph(&self) -> Graph {
        let chords = self.chords();
        let pos = self.positions();
        let mut edges = Vec::new();
        for (i, u) in chords.iter().enumerate() {
            for w in &chords[i + 1..] {
                if crosses(pos[u], pos[w]) {
                    edges.push((*u, *w));
                }
            }
        }
        Graph::new(&chords, &edges).expect("chord names are distinct")
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Two chords cross iff exactly one endpoint of one lies strictly between the
/// endpoints of the other. Positions are linear indices with `p.0 < p.1`.
fn crosses(p: (usize, usize), q: (usize, usize)) -> bool {
    let inside = |x: usize| p.0 < x && x < p.1;
    inside(q.0) != inside(q.1)
}

/// An oriented chord diagram: every chord has one head and one tail token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedChordDiagram {
    tokens: Vec<Token>,
    ends: HashMap<String, (usize, usize)>,
}

impl OrientedChordDiagram {
    pub fn from_tokens(tokens: Vec<Token>) -> Result<OrientedChordDiagram, DiagramError> {
        let mut heads: HashMap<&str, usize> = HashMap::new();
        let mut tails: HashMap<&str, usize> = HashMap::new();
        for (i, t) in tokens.iter().enumerate() {
            let slot = match t.kind {
                EndKind::Head => &mut heads,
                EndKind::Tail => &mut tails,
            };
            if slot.insert(&t.vertex, i).is_some() {
                return Err(DiagramError::InvalidTokens(format!(
                    "chord {:?} has two {:?} ends",
                    t.vertex, t.kind
                )));
            }
        }
        let mut ends = HashMap::new();
        for (v, &h) in &heads {
            match tails.get(v) {
                Some(&t) => {
                    ends.insert(v.to_string(), (h, t));
                }
                None => {
                    return Err(DiagramError::InvalidTokens(format!(
                        "chord {v:?} has a head but no tail"
                    )))
                }
            }
        }
        for v in tails.keys() {
            if !heads.contains_key(v) {
                return Err(DiagramError::InvalidTokens(format!(
                    "chord {v:?} has a tail but no head"
                )));
            }
        }
        Ok(OrientedChordDiagram { tokens, ends })
    }

    /// Parses the oriented text form: `v+` for a head, `v-` for a tail.
    pub fn parse(text: &str) -> Result<OrientedChordDiagram, DiagramError> {
        let mut tokens = Vec::new();
        for raw in text.split_whitespace() {
            let (name, kind) = match raw.strip_suffix('+') {
                Some(n) => (n, EndKind::Head),
                None => match raw.strip_suffix('-') {
                    Some(n) => (n, EndKind::Tail),
                    None => {
                        return Err(DiagramError::InvalidTokens(format!(
                            "token {raw:?} must end in + or -"
                        )))
                    }
                },
            };
            if name.is_empty() {
                return Err(DiagramError::InvalidTokens(format!(
                    "empty chord name in {raw:?}"
                )));
            }
            tokens.push(Token::new(name, kind));
        }
        Self::from_tokens(tokens)
    }

    pub fn to_text(&self) -> String {
        self.tokens
            .iter()
            .map(Token::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn chord_count(&self) -> usize {
        self.tokens.len() / 2
    }

    pub fn contains(&self, v: &str) -> bool {
        self.ends.contains_key(v)
    }

    /// Chord names in first-appearance order.
    pub fn chords(&self) -> Vec<&str> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for t in &self.tokens {
            if seen.insert(t.vertex.as_str()) {
                out.push(t.vertex.as_str());
            }
        }
        out
    }

    /// `(head position, tail position)` of a chord.
    pub fn ends(&self, v: &str) -> Option<(usize, usize)> {
        self.ends.get(v).copied()
    }

    pub fn rotated(&self, k: usize) -> OrientedChordDiagram {
        if self.tokens.is_empty() {
            return self.clone();
        }
        let n = self.tokens.len();
        let tokens: Vec<Token> = (0..n).map(|i| self.tokens[(i + k) % n].clone()).collect();
        OrientedChordDiagram::from_tokens(tokens).expect("rotation preserves validity")
    }

    pub fn unoriented(&self) -> ChordDiagram {
        ChordDiagram::from_word(self.tokens.iter().map(|t| t.vertex.clone()).collect())
            .expect("oriented diagram has a valid word")
    }

    pub fn interlacement_graph(&self) -> Graph {
        self.unoriented().interlacement_graph()
    }

    /// The lexicographically least rotation of the clockwise token sequence;
    /// two diagrams are equivalent exactly when these strings are equal.
    pub fn canonical_encoding(&self) -> String {
        let n = self.tokens.len();
        (0..n.max(1))
            .map(|k| self.rotated(k).to_text())
            .min()
            .unwrap_or_default()
    }
}

impl fmt::Display for OrientedChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A set of gaps of a diagram with `diagram_size` tokens. Gap `i` is the
/// space immediately preceding token `i` in clockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapSet {
    diagram_size: usize,
    gaps: BTreeSet<usize>,
}

impl GapSet {
    pub fn empty(diagram_size: usize) -> GapSet {
        GapSet {
            diagram_size,
            gaps: BTreeSet::new(),
        }
    }

    pub fn full(diagram_size: usize) -> GapSet {
        GapSet {
            diagram_size,
            gaps: (0..diagram_size).collect(),
        }
    }

    pub fn from_gaps(diagram_size: usize, gaps: impl IntoIterator<Item = usize>) -> GapSet {
        let gaps: BTreeSet<usize> = gaps.into_iter().collect();
        debug_assert!(gaps.iter().all(|&g| g < diagram_size));
        GapSet { diagram_size, gaps }
    }

    pub fn diagram_size(&self) -> usize {
        self.diagram_size
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.gaps.contains(&g)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.gaps.iter().copied()
    }

    /// The single gap, when the set has exactly one.
    pub fn single(&self) -> Option<usize> {
        if self.gaps.len() == 1 {
            self.gaps.iter().next().copied()
        } else {
            None
        }
    }

    pub fn intersection(&self, other: &GapSet) -> GapSet {
        debug_assert_eq!(self.diagram_size, other.diagram_size);
        GapSet {
            diagram_size: self.diagram_size,
            gaps: self.gaps.intersection(&other.gaps).copied().collect(),
        }
    }

    pub fn complement(&self) -> GapSet {
        GapSet {
            diagram_size: self.diagram_size,
            gaps: (0..self.diagram_size)
                .filter(|g| !self.gaps.contains(g))
                .collect(),
        }
    }
}

/// Gaps in the clockwise open arc from the head of `v` to its tail: the
/// "right side" of the oriented chord.
fn right_gaps(d: &OrientedChordDiagram, v: &str) -> Result<GapSet, DiagramError> {
    let (h, t) = d
        .ends(v)
        .ok_or_else(|| DiagramError::UnknownChord(v.to_string()))?;
    let n = d.tokens().len();
    let span = (t + n - h) % n;
    Ok(GapSet::from_gaps(n, (1..=span).map(|k| (h + k) % n)))
}

/// Feasible gaps for inserting a new chord `c` into `d` so the extended
/// diagram still realizes `beta`. Returns `(H, T)`: the head must go into a
/// gap of `H` and the tail into a gap of `T`. The head constraint for each
/// present chord `v` is the right side of `v` when `beta(v, c) = 0` and the
/// left side otherwise; the tail constraint is the same computation after
/// reorienting `beta` at `c`.
pub fn feasible_gaps(
    d: &OrientedChordDiagram,
    beta: &NajiAssignment,
    c: &str,
) -> Result<(GapSet, GapSet), DiagramError> {
    if d.contains(c) {
        return Err(DiagramError::ChordPresent(c.to_string()));
    }
    let n = d.tokens().len();
    let mut head = GapSet::full(n);
    let mut tail = GapSet::full(n);
    for v in d.chords() {
        let right = right_gaps(d, v)?;
        let left = right.complement();
        let b = beta.get(v, c)?;
        head = head.intersection(if b { &left } else { &right });
        // delta_c flips beta(v, c) exactly when vc is an edge
        let bt = b ^ beta.graph().has_edge(v, c);
        tail = tail.intersection(if bt { &left } else { &right });
    }
    Ok((head, tail))
}

/// Splices chord `c` into the diagram with its tail immediately before token
/// `tail_gap` and its head immediately before token `head_gap`.
pub fn insert_chord(
    d: &OrientedChordDiagram,
    c: &str,
    tail_gap: usize,
    head_gap: usize,
) -> Result<OrientedChordDiagram, DiagramError> {
    if d.contains(c) {
        return Err(DiagramError::ChordPresent(c.to_string()));
    }
    let n = d.tokens().len();
    if tail_gap >= n {
        return Err(DiagramError::GapOutOfRange(tail_gap, n));
    }
    if head_gap >= n {
        return Err(DiagramError::GapOutOfRange(head_gap, n));
    }
    if tail_gap == head_gap {
        return Err(DiagramError::SameGap);
    }
    let mut tokens = Vec::with_capacity(n + 2);
    for (i, t) in d.tokens().iter().enumerate() {
        if i == tail_gap {
            tokens.push(Token::new(c, EndKind::Tail));
        }
        if i == head_gap {
            tokens.push(Token::new(c, EndKind::Head));
        }
        tokens.push(t.clone());
    }
    OrientedChordDiagram::from_tokens(tokens)
}

/// Result of attempting to realize a solution as an oriented chord diagram.
#[derive(Clone, Debug)]
pub enum BuildOutcome {
    Diagram(OrientedChordDiagram),
    /// The solution is not chordal: after placing `prefix`, no feasible gap
    /// remained for `failing`.
    NonChordal {
        prefix: Vec<String>,
        failing: String,
    },
}

impl BuildOutcome {
    pub fn diagram(&self) -> Option<&OrientedChordDiagram> {
        match self {
            BuildOutcome::Diagram(d) => Some(d),
            BuildOutcome::NonChordal { .. } => None,
        }
    }

    pub fn is_non_chordal(&self) -> bool {
        matches!(self, BuildOutcome::NonChordal { .. })
    }
}

/// Builds an oriented chord diagram realizing `(g, beta)`, inserting chords
/// in the deterministic connected-prefix elimination order, or reports the
/// prefix at which the solution turned out not to be chordal.
pub fn build_diagram(g: &Graph, beta: &NajiAssignment) -> Result<BuildOutcome, DiagramError> {
    if !g.is_connected() {
        return Err(DiagramError::NotConnected);
    }
    let order = g.elimination_order()?;
    build_with_order_unchecked(g, beta, &order)
}

/// Like [`build_diagram`] but with a caller-supplied insertion order, which
/// must be a permutation of the vertices with every prefix inducing a
/// connected subgraph. The outcome is the same for every valid order.
pub fn build_diagram_with_order(
    g: &Graph,
    beta: &NajiAssignment,
    order: &[String],
) -> Result<BuildOutcome, DiagramError> {
    if order.len() != g.vertex_count() {
        return Err(DiagramError::InvalidOrder(format!(
            "order has {} vertices, graph has {}",
            order.len(),
            g.vertex_count()
        )));
    }
    let mut seen = BTreeSet::new();
    for v in order {
        if !g.contains(v) {
            return Err(DiagramError::InvalidOrder(format!("unknown vertex {v:?}")));
        }
        if !seen.insert(v.clone()) {
            return Err(DiagramError::InvalidOrder(format!("vertex {v:?} repeated")));
        }
    }
    for i in 1..=order.len() {
        let prefix = g.induced_subgraph(&order[..i])?;
        if !prefix.is_connected() {
            return Err(DiagramError::InvalidOrder(format!(
                "prefix {:?} is not connected",
                &order[..i]
            )));
        }
    }
    build_with_order_unchecked(g, beta, order)
}

fn build_with_order_unchecked(
    g: &Graph,
    beta: &NajiAssignment,
    order: &[String],
) -> Result<BuildOutcome, DiagramError> {
    if beta.graph() != g {
        return Err(DiagramError::AssignmentMismatch);
    }
    let violations = naji::verify(g, beta)?;
    if let Some(tag) = violations.first() {
        return Err(DiagramError::NotASolution(tag.to_string()));
    }
    let first = match order.first() {
        Some(v) => v,
        None => return Err(DiagramError::InvalidOrder("empty order".into())),
    };
    // The first chord's orientation is a free gauge: all placements are
    // rotation-equivalent.
    let mut d = OrientedChordDiagram::from_tokens(vec![
        Token::new(first, EndKind::Head),
        Token::new(first, EndKind::Tail),
    ])?;
    let mut inserted = vec![first.clone()];
    for c in &order[1..] {
        let (head, tail) = feasible_gaps(&d, beta, c)?;
        if head.is_empty() || tail.is_empty() {
            return Ok(BuildOutcome::NonChordal {
                prefix: inserted,
                failing: c.clone(),
            });
        }
        // With a connected prefix each feasible set is a single gap and the
        // two gaps differ; anything else is a broken contract, not a
        // non-chordal solution.
        let (hg, tg) = match (head.single(), tail.single()) {
            (Some(h), Some(t)) if h != t => (h, t),
            (Some(_), Some(_)) => {
                return Err(DiagramError::Internal(
                    "head and tail gaps coincide on a connected prefix".into(),
                ))
            }
            _ => {
                return Err(DiagramError::Internal(format!(
                    "feasible gap set larger than one gap for {c:?} (H={}, T={})",
                    head.len(),
                    tail.len()
                )))
            }
        };
        d = insert_chord(&d, c, tg, hg)?;
        inserted.push(c.clone());
    }
    let realized = naji::beta_from_diagram(&d);
    if &realized != beta {
        return Err(DiagramError::Internal(
            "constructed diagram does not realize the assignment".into(),
        ));
    }
    Ok(BuildOutcome::Diagram(d))
}
