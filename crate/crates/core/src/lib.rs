//! Circle-graph recognition with checkable certificates.
//!
//! A graph is a circle graph when it is the intersection graph of chords on a
//! circle. This crate decides membership constructively: it builds the Naji
//! system of GF(2) equations for the input graph, solves it, and either
//! produces a chord diagram whose interlacement graph equals the input or an
//! infeasibility witness (a subset of equations summing to 0 = 1). Both
//! certificate kinds can be re-checked independently of the recognizer.

pub mod diagram;
pub mod graph;
pub mod naji;
pub mod obstruction;
pub mod oracle;
pub mod recognizer;
pub mod split;

#[cfg(test)]
pub(crate) mod testutil;

pub use diagram::{
    build_diagram, build_diagram_with_order, feasible_gaps, insert_chord, BuildOutcome,
    ChordDiagram, DiagramError, EndKind, GapSet, OrientedChordDiagram, Token,
};
pub use graph::{Graph, GraphError, GraphFormat, Parsed, Split};
pub use naji::{
    beta_from_diagram, build_system, verify, InfeasibilityWitness, LinearSystem, NajiAssignment,
    NajiError, RowTag, SolveOutcome,
};
pub use obstruction::{
    arcs_touch, find_obstruction, is_claw_obstruction, is_k4_obstruction, minimal_cover,
    orientation_of, CircleArc, CyclicArcSequence, Obstruction, ObstructionError, Orientation,
};
pub use oracle::{
    enumerate_diagrams, oracle_find, oracle_find_with_cap, MatchingEnumerator, OracleError,
};
pub use recognizer::{
    check_certificate, diagram_for_solution, recognize, Certificate, RecognizerError, TraceEvent,
    Verdict,
};
pub use split::{
    compose_split_diagrams, extend_claw_split, extend_k4_split, maximal_quadruple_sets,
    QuadrupleSets, SplitError,
};
