//! Graph burning toolkit.
//!
//! Approximation algorithms for the burning number of cactus graphs
//! (factor 2.75), polytrees (3) and arborescences (2 and 1.905), together
//! with a burning simulator, an exact search oracle, the classic
//! 3-approximation for general graphs, seeded instance generators and a
//! benchmark harness.

pub mod bench;
pub mod burn;
pub mod cactus;
pub mod ditree;
pub mod error;
pub mod gen;
pub mod graph;
pub mod oracle;

pub use burn::{
    assemble, ceil_range, simulate, validate, BurningSchedule, CenterSets, Coef, Simulation, Verdict,
    Violation,
};
pub use error::{BurnError, Result};
pub use graph::{AnyGraph, DirectedTree, TreeClass, UndirectedGraph, VertexId};

/// Result of a per-guess procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GuessOutcome<T> {
    Success(T),
    BadGuess(BadGuess),
}

impl<T> GuessOutcome<T> {
    pub fn is_bad_guess(&self) -> bool {
        matches!(self, GuessOutcome::BadGuess(_))
    }

    pub fn success(self) -> Option<T> {
        match self {
            GuessOutcome::Success(t) => Some(t),
            GuessOutcome::BadGuess(_) => None,
        }
    }
}

/// Why a guess `b` was rejected; each tag certifies `b(G) > b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BadGuess {
    /// Cactus: the small-range budget ran out with no usable cut vertex.
    Budget2Exhausted,
    /// Cactus: both range budgets ran out.
    BothExhausted,
    /// Directed trees: more than `b` centers with in-degree at most one.
    TooManyCenters,
    /// Polytrees: more than `b` centers with in-degree above one.
    TooManyJoinCenters,
    /// Merge-and-burn: no burning range left for an unmerged center.
    RangesExhausted,
    /// Baseline: more than `b` centers pairwise at distance `>= 2b - 1`.
    TooManySpreadCenters,
}

/// A schedule produced by one of the approximation drivers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approximation {
    pub schedule: BurningSchedule,
    /// Smallest guess that the per-guess procedure accepted.
    pub b_star: u32,
}
