use thiserror::Error;

use crate::graph::VertexId;

/// Errors raised by graph construction, algorithms and I/O.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BurnError {
    #[error("vertex {0} is out of range")]
    InvalidVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a cactus")]
    NotCactus,
    #[error("graph has no articulation point (single cycle or trivial graph)")]
    NoArticulationPoint,
    #[error("directed graph is not a polytree")]
    NotPolytree,
    #[error("directed graph is not an arborescence")]
    NotArborescence,
    #[error("{alg} does not apply: {reason}")]
    ClassMismatch { alg: String, reason: String },
    #[error("no eligible vertex")]
    NoEligibleVertex,
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("invalid burning sequence: {0}")]
    InvalidSchedule(String),
    #[error("graph has {n} vertices, exact oracle cap is {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("exact search exceeded its budget of {0} expansions")]
    BudgetExceeded(u64),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for BurnError {
    fn from(e: std::io::Error) -> Self {
        BurnError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, BurnError>;
