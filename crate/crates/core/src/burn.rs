//! Burning process semantics.
//!
//! A schedule `[x_0, ..., x_{L-1}]` ignites `x_i` in round `i + 1`. In the
//! same round every vertex that caught fire in the previous round burns its
//! unburned out-neighbors. A source must be unburned at the start of its
//! round, i.e. `d(x_i, x_j) >= j - i` for `i < j`. After `L` rounds the
//! burned set is `U_i N_{L-1-i}[x_i]`.

use std::fmt;
use std::str::FromStr;

use crate::error::{BurnError, Result};
use crate::graph::{Adjacency, VertexId};

/// Exact rational coefficient used for burning ranges like `1.75b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coef {
    num: u64,
    den: u64,
}

impl Coef {
    pub const QUARTER: Coef = Coef::new(1, 4);
    pub const THREE_QUARTERS: Coef = Coef::new(3, 4);
    pub const SEVEN_QUARTERS: Coef = Coef::new(7, 4);
    pub const ELEVEN_QUARTERS: Coef = Coef::new(11, 4);
    pub const MERGE_REACH: Coef = Coef::new(81, 100);
    pub const MERGE_RANGE: Coef = Coef::new(181, 100);
    pub const ARB_BUDGET: Coef = Coef::new(381, 200);
    pub const PATH_TRIM: Coef = Coef::new(19, 100);

    pub const fn new(num: u64, den: u64) -> Self {
        assert!(den > 0);
        Self { num, den }
    }
}

/// `ceil(b * k)` in integer arithmetic.
pub fn ceil_range(b: u32, k: Coef) -> u32 {
    let prod = b as u64 * k.num;
    prod.div_ceil(k.den) as u32
}

/// Ordered list of fire sources.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BurningSchedule(pub Vec<VertexId>);

impl BurningSchedule {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sources(&self) -> &[VertexId] {
        &self.0
    }
}

impl fmt::Display for BurningSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for BurningSchedule {
    type Err = BurnError;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|tok| {
                tok.parse().map_err(|_| BurnError::Parse {
                    line: 1,
                    msg: format!("bad vertex id `{tok}`"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(BurningSchedule)
    }
}

/// First rule a schedule breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    InvalidVertex { position: usize, vertex: VertexId },
    DuplicateSource { position: usize, vertex: VertexId },
    AlreadyBurned { position: usize, vertex: VertexId },
    Unburned { vertex: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidVertex { position, vertex } => {
                write!(f, "source {vertex} at position {position} is not a vertex")
            }
            Violation::DuplicateSource { position, vertex } => {
                write!(f, "source {vertex} repeated at position {position}")
            }
            Violation::AlreadyBurned { position, vertex } => {
                write!(f, "source already burned: {vertex} at position {position}")
            }
            Violation::Unburned { vertex } => write!(f, "vertex {vertex} unburned"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(Violation),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

/// Round-by-round burning process.
#[derive(Debug, Clone)]
pub struct BurnProcess<'g, G: Adjacency + ?Sized> {
    graph: &'g G,
    burned: Vec<bool>,
    frontier: Vec<VertexId>,
    burned_count: usize,
    rounds: usize,
}

impl<'g, G: Adjacency + ?Sized> BurnProcess<'g, G> {
    pub fn new(graph: &'g G) -> Self {
        Self {
            graph,
            burned: vec![false; graph.vertex_count()],
            frontier: Vec::new(),
            burned_count: 0,
            rounds: 0,
        }
    }

    pub fn is_burned(&self, v: VertexId) -> bool {
        self.burned[v]
    }

    pub fn all_burned(&self) -> bool {
        self.burned_count == self.burned.len()
    }

    pub fn rounds(&self) -> usize {
        self.rounds
    }

    pub fn burned(&self) -> &[bool] {
        &self.burned
    }

    /// Plays one round: the fire spreads one step and `source` ignites.
    pub fn step(&mut self, source: VertexId) -> std::result::Result<(), Violation> {
        if source >= self.burned.len() {
            return Err(Violation::InvalidVertex { position: self.rounds, vertex: source });
        }
        if self.burned[source] {
            return Err(Violation::AlreadyBurned { position: self.rounds, vertex: source });
        }
        self.spread_with(Some(source));
        Ok(())
    }

    /// Plays one round with no new source.
    pub fn spread(&mut self) {
        self.spread_with(None);
    }

    fn spread_with(&mut self, source: Option<VertexId>) {
        let mut next = Vec::new();
        for &u in &self.frontier {
            for &w in self.graph.out_neighbors(u) {
                if !self.burned[w] {
                    self.burned[w] = true;
                    next.push(w);
                }
            }
        }
        if let Some(s) = source {
            if !self.burned[s] {
                self.burned[s] = true;
                next.push(s);
            }
        }
        self.burned_count += next.len();
        self.frontier = next;
        self.rounds += 1;
    }
}

/// Outcome of running a whole schedule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simulation {
    pub burned: Vec<bool>,
    pub rounds_to_cover: Option<usize>,
}

impl Simulation {
    pub fn burned_set(&self) -> Vec<VertexId> {
        (0..self.burned.len()).filter(|&v| self.burned[v]).collect()
    }
}

fn run<G: Adjacency + ?Sized>(g: &G, s: &BurningSchedule) -> std::result::Result<Simulation, Violation> {
    let mut seen = vec![false; g.vertex_count()];
    for (position, &vertex) in s.0.iter().enumerate() {
        if vertex >= seen.len() {
            return Err(Violation::InvalidVertex { position, vertex });
        }
        if std::mem::replace(&mut seen[vertex], true) {
            return Err(Violation::DuplicateSource { position, vertex });
        }
    }
    let mut p = BurnProcess::new(g);
    let mut rounds_to_cover = None;
    for &v in &s.0 {
        p.step(v)?;
        if rounds_to_cover.is_none() && p.all_burned() {
            rounds_to_cover = Some(p.rounds());
        }
    }
    Ok(Simulation {
        burned: p.burned,
        rounds_to_cover,
    })
}

/// Runs `s` on `g`; fails when a source is invalid or already burned.
pub fn simulate<G: Adjacency + ?Sized>(g: &G, s: &BurningSchedule) -> Result<Simulation> {
    run(g, s).map_err(|v| BurnError::InvalidSchedule(v.to_string()))
}

/// Accepts iff the sources are valid, distinct, unburned when chosen, and
/// every vertex burns within `L` rounds.
pub fn validate<G: Adjacency + ?Sized>(g: &G, s: &BurningSchedule) -> Verdict {
    match run(g, s) {
        Err(v) => Verdict::Reject(v),
        Ok(sim) => match sim.burned.iter().position(|b| !b) {
            Some(vertex) => Verdict::Reject(Violation::Unburned { vertex }),
            None => Verdict::Accept,
        },
    }
}

/// A batch of centers that all need the same burning radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterGroup {
    pub label: &'static str,
    pub centers: Vec<VertexId>,
    pub radius: u32,
}

/// Algorithm output: center lists, each with its required radius.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CenterSets {
    pub groups: Vec<CenterGroup>,
}

impl CenterSets {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_group(mut self, label: &'static str, centers: Vec<VertexId>, radius: u32) -> Self {
        self.groups.push(CenterGroup { label, centers, radius });
        self
    }

    pub fn group(&self, label: &str) -> Option<&CenterGroup> {
        self.groups.iter().find(|g| g.label == label)
    }

    pub fn center_count(&self) -> usize {
        self.groups.iter().map(|g| g.centers.len()).sum()
    }

    /// Centers in placement order: non-increasing radius, group order within ties.
    pub fn placement(&self) -> Vec<(VertexId, u32)> {
        let mut out: Vec<(VertexId, u32)> = self
            .groups
            .iter()
            .flat_map(|g| g.centers.iter().map(move |&c| (c, g.radius)))
            .collect();
        out.sort_by_key(|&(_, r)| std::cmp::Reverse(r));
        out
    }

    /// Smallest schedule length giving every center its radius.
    pub fn tight_length(&self) -> usize {
        self.placement()
            .iter()
            .enumerate()
            .map(|(j, &(_, r))| j + 1 + r as usize)
            .max()
            .unwrap_or(1)
    }
}

/// Builds a schedule of length at most `length` from center sets.
///
/// Centers go first, largest radius first. A center that is already
/// burned when its turn comes is skipped: the source that burned it has a
/// strictly larger remaining radius, so its ball already contains the
/// skipped center's ball. Free positions take the smallest-id unburned
/// vertex. The schedule stops as soon as everything burns.
pub fn assemble<G: Adjacency + ?Sized>(g: &G, centers: &CenterSets, length: usize) -> Result<BurningSchedule> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(BurnError::EmptyGraph);
    }
    let placement = centers.placement();
    for (j, &(c, r)) in placement.iter().enumerate() {
        if c >= n {
            return Err(BurnError::InvalidVertex(c));
        }
        if j + 1 + r as usize > length {
            return Err(BurnError::Infeasible(format!(
                "center {c} needs radius {r} at position {j} of a length-{length} schedule"
            )));
        }
    }

    let mut p = BurnProcess::new(g);
    let mut out = Vec::new();
    let mut pending = placement.iter().map(|&(c, _)| c).peekable();
    let mut filler = 0;
    while !p.all_burned() && out.len() < length {
        while pending.peek().is_some_and(|&c| p.is_burned(c)) {
            pending.next();
        }
        let source = match pending.next() {
            Some(c) => c,
            None => {
                while p.is_burned(filler) {
                    filler += 1;
                }
                filler
            }
        };
        p.step(source).expect("source chosen unburned");
        out.push(source);
    }
    if !p.all_burned() {
        return Err(BurnError::Infeasible(
            "center balls do not cover the graph".to_string(),
        ));
    }
    Ok(BurningSchedule(out))
}
