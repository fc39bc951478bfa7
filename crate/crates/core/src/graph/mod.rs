//! Graph representations and structural queries.
//!
//! Graphs are immutable once built. Algorithms keep their own overlay
//! state (marks, cut trees) next to a shared `&` reference.

mod format;
mod lca;
mod lowlink;

use std::collections::VecDeque;

use crate::error::{BurnError, Result};

pub use format::{read_graph, write_graph, AnyGraph};
pub use lca::{lca, lca_length, AncestorIndex};
pub use lowlink::{articulation_points, biconnected_components, is_cactus, DfsTree};

/// Dense vertex index, `0 <= id < n`.
pub type VertexId = usize;

/// Out-adjacency view shared by undirected graphs and directed trees.
///
/// For undirected graphs the out-neighbors are simply the neighbors, so
/// every traversal written against this trait follows arc direction when
/// given a directed tree.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn out_neighbors(&self, v: VertexId) -> &[VertexId];
}

/// Simple connected-or-not undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    adjacency: Vec<Vec<VertexId>>,
    // Input order is kept so the text format round-trips byte for byte.
    edges: Vec<(VertexId, VertexId)>,
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(BurnError::InvalidVertex(a));
            }
            if b >= n {
                return Err(BurnError::InvalidVertex(b));
            }
            if a == b {
                return Err(BurnError::SelfLoop(a));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
            list.push((a, b));
        }
        for (v, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(BurnError::ParallelEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(Self { adjacency, edges: list })
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_connected(&self) -> bool {
        is_weakly_connected(self)
    }
}

impl Adjacency for UndirectedGraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }
}

/// Structural class of a directed graph whose underlying graph should be a tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeClass {
    Polytree,
    Arborescence,
    Invalid,
}

/// Directed graph meant to be a polytree or arborescence.
///
/// Construction only rejects malformed arcs; use [`DirectedTree::classify`]
/// to learn whether the underlying graph really is a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedTree {
    out_adj: Vec<Vec<VertexId>>,
    in_adj: Vec<Vec<VertexId>>,
    arcs: Vec<(VertexId, VertexId)>,
}

impl DirectedTree {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (a, b) in arcs {
            if a >= n {
                return Err(BurnError::InvalidVertex(a));
            }
            if b >= n {
                return Err(BurnError::InvalidVertex(b));
            }
            if a == b {
                return Err(BurnError::SelfLoop(a));
            }
            out_adj[a].push(b);
            in_adj[b].push(a);
            list.push((a, b));
        }
        for (v, outs) in out_adj.iter_mut().enumerate() {
            outs.sort_unstable();
            if let Some(w) = outs.windows(2).find(|w| w[0] == w[1]) {
                return Err(BurnError::ParallelEdge(v, w[0]));
            }
        }
        for ins in &mut in_adj {
            ins.sort_unstable();
        }
        Ok(Self { out_adj, in_adj, arcs: list })
    }

    /// Directed chain `0 -> 1 -> ... -> (n-1)`.
    pub fn chain(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("chain is simple")
    }

    pub fn n(&self) -> usize {
        self.out_adj.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.in_adj[v]
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_adj[v].len()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v].len()
    }

    /// Vertices with in-degree zero, ascending.
    pub fn roots(&self) -> Vec<VertexId> {
        (0..self.n()).filter(|&v| self.in_adj[v].is_empty()).collect()
    }

    /// Underlying undirected graph. Fails on antiparallel arc pairs.
    pub fn underlying(&self) -> Result<UndirectedGraph> {
        UndirectedGraph::new(self.n(), self.arcs.iter().copied())
    }

    pub fn classify(&self) -> TreeClass {
        let n = self.n();
        if n == 0 || self.arcs.len() != n - 1 {
            return TreeClass::Invalid;
        }
        let under = match self.underlying() {
            Ok(g) => g,
            Err(_) => return TreeClass::Invalid,
        };
        // n - 1 edges and connected means acyclic.
        if !under.is_connected() {
            return TreeClass::Invalid;
        }
        let roots = self.in_adj.iter().filter(|ins| ins.is_empty()).count();
        if roots == 1 && self.in_adj.iter().all(|ins| ins.len() <= 1) {
            TreeClass::Arborescence
        } else {
            TreeClass::Polytree
        }
    }

    pub fn is_polytree(&self) -> bool {
        self.classify() != TreeClass::Invalid
    }

    pub fn is_arborescence(&self) -> bool {
        self.classify() == TreeClass::Arborescence
    }
}

impl Adjacency for DirectedTree {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out_adj[v]
    }
}

/// Convenience wrapper for [`DirectedTree::classify`].
pub fn classify_ditree(t: &DirectedTree) -> TreeClass {
    t.classify()
}

fn is_weakly_connected(g: &UndirectedGraph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let d = bfs_distances(g, 0);
    d.dist.iter().all(Option::is_some)
}

/// Hop distances from a single source; `None` marks unreachable vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMap {
    pub source: VertexId,
    pub dist: Vec<Option<u32>>,
}

impl DistanceMap {
    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.dist[v]
    }

    /// Largest finite distance.
    pub fn eccentricity(&self) -> u32 {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// Breadth-first hop distances following out-arcs.
pub fn bfs_distances<G: Adjacency + ?Sized>(g: &G, source: VertexId) -> DistanceMap {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.out_neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    DistanceMap { source, dist }
}

/// An eligible vertex farthest from `source`, smallest id on ties.
///
/// Unreachable vertices are never chosen.
pub fn farthest_from<G, P>(g: &G, source: VertexId, mut eligible: P) -> Result<VertexId>
where
    G: Adjacency + ?Sized,
    P: FnMut(VertexId) -> bool,
{
    let d = bfs_distances(g, source);
    let mut best: Option<(u32, VertexId)> = None;
    for v in 0..g.vertex_count() {
        if let Some(dv) = d.dist[v] {
            if eligible(v) && best.is_none_or(|(bd, _)| dv > bd) {
                best = Some((dv, v));
            }
        }
    }
    best.map(|(_, v)| v).ok_or(BurnError::NoEligibleVertex)
}

/// Reusable radius-limited BFS. Avoids clearing an `n`-sized array per ball.
#[derive(Debug, Clone)]
pub struct BallSearch {
    stamp: Vec<u32>,
    epoch: u32,
    queue: VecDeque<(VertexId, u32)>,
}

impl BallSearch {
    pub fn new(n: usize) -> Self {
        Self {
            stamp: vec![0; n],
            epoch: 0,
            queue: VecDeque::new(),
        }
    }

    /// Calls `visit(v, d)` for every `v` with `d(center, v) = d <= radius`.
    pub fn for_each<G, F>(&mut self, g: &G, center: VertexId, radius: u32, mut visit: F)
    where
        G: Adjacency + ?Sized,
        F: FnMut(VertexId, u32),
    {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        self.queue.clear();
        self.stamp[center] = epoch;
        self.queue.push_back((center, 0));
        while let Some((u, d)) = self.queue.pop_front() {
            visit(u, d);
            if d == radius {
                continue;
            }
            for &w in g.out_neighbors(u) {
                if self.stamp[w] != epoch {
                    self.stamp[w] = epoch;
                    self.queue.push_back((w, d + 1));
                }
            }
        }
    }

    pub fn collect<G: Adjacency + ?Sized>(&mut self, g: &G, center: VertexId, radius: u32) -> Vec<VertexId> {
        let mut out = Vec::new();
        self.for_each(g, center, radius, |v, _| out.push(v));
        out.sort_unstable();
        out
    }
}

/// Closed ball `N_radius[center]`, sorted ascending.
pub fn ball<G: Adjacency + ?Sized>(g: &G, center: VertexId, radius: u32) -> Vec<VertexId> {
    BallSearch::new(g.vertex_count()).collect(g, center, radius)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_distances() {
        let g = UndirectedGraph::path(3);
        let d = bfs_distances(&g, 0);
        assert_eq!(d.dist, vec![Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn single_vertex_distance() {
        let g = UndirectedGraph::new(1, []).unwrap();
        assert_eq!(bfs_distances(&g, 0).dist, vec![Some(0)]);
    }

    #[test]
    fn directed_chain_unreachable() {
        let t = DirectedTree::chain(3);
        let d = bfs_distances(&t, 2);
        assert_eq!(d.dist, vec![None, None, Some(0)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(UndirectedGraph::new(2, [(0, 0)]), Err(BurnError::SelfLoop(0)));
        assert_eq!(UndirectedGraph::new(2, [(0, 2)]), Err(BurnError::InvalidVertex(2)));
        assert_eq!(
            UndirectedGraph::new(2, [(0, 1), (1, 0)]),
            Err(BurnError::ParallelEdge(0, 1))
        );
    }

    #[test]
    fn farthest_ties_and_eligibility() {
        let star = UndirectedGraph::star(3);
        assert_eq!(farthest_from(&star, 0, |_| true).unwrap(), 1);
        let p = UndirectedGraph::path(3);
        assert_eq!(farthest_from(&p, 0, |v| v != 2).unwrap(), 1);
        assert_eq!(farthest_from(&p, 1, |_| true).unwrap(), 0);
        assert_eq!(farthest_from(&p, 1, |_| false), Err(BurnError::NoEligibleVertex));
    }

    #[test]
    fn classify_examples() {
        let arb = DirectedTree::new(3, [(0, 1), (0, 2)]).unwrap();
        assert_eq!(arb.classify(), TreeClass::Arborescence);
        let poly = DirectedTree::new(3, [(0, 1), (2, 1)]).unwrap();
        assert_eq!(poly.classify(), TreeClass::Polytree);
        let two_cycle = DirectedTree::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(two_cycle.classify(), TreeClass::Invalid);
        let forest = DirectedTree::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(forest.classify(), TreeClass::Invalid);
        assert_eq!(DirectedTree::new(1, []).unwrap().classify(), TreeClass::Arborescence);
    }

    #[test]
    fn ball_follows_direction() {
        let t = DirectedTree::chain(4);
        assert_eq!(ball(&t, 1, 1), vec![1, 2]);
        assert_eq!(ball(&t.underlying().unwrap(), 1, 1), vec![0, 1, 2]);
    }
}
