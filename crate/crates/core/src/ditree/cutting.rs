//! Leaf peeling for directed trees.
//!
//! One cutting round deletes, simultaneously, every surviving vertex with
//! out-degree 0 and in-degree 1. Vertices with several in-neighbors and
//! roots are never cut.

use crate::graph::{DirectedTree, VertexId};

/// A vertex subset of a [`DirectedTree`] with induced degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutTree<'t> {
    tree: &'t DirectedTree,
    alive: Vec<bool>,
    in_deg: Vec<u32>,
    out_deg: Vec<u32>,
    alive_count: usize,
}

impl<'t> CutTree<'t> {
    /// The whole tree.
    pub fn new(tree: &'t DirectedTree) -> Self {
        Self::from_alive(tree, vec![true; tree.n()])
    }

    /// The subgraph induced by `alive`.
    pub fn from_alive(tree: &'t DirectedTree, alive: Vec<bool>) -> Self {
        assert_eq!(alive.len(), tree.n());
        let n = tree.n();
        let mut in_deg = vec![0; n];
        let mut out_deg = vec![0; n];
        for &(a, b) in tree.arcs() {
            if alive[a] && alive[b] {
                out_deg[a] += 1;
                in_deg[b] += 1;
            }
        }
        let alive_count = alive.iter().filter(|&&a| a).count();
        Self {
            tree,
            alive,
            in_deg,
            out_deg,
            alive_count,
        }
    }

    pub fn tree(&self) -> &'t DirectedTree {
        self.tree
    }

    pub fn is_alive(&self, v: VertexId) -> bool {
        self.alive[v]
    }

    pub fn alive(&self) -> &[bool] {
        &self.alive
    }

    pub fn len(&self) -> usize {
        self.alive_count
    }

    pub fn is_empty(&self) -> bool {
        self.alive_count == 0
    }

    pub fn in_degree(&self, v: VertexId) -> u32 {
        self.in_deg[v]
    }

    pub fn out_degree(&self, v: VertexId) -> u32 {
        self.out_deg[v]
    }

    /// Surviving vertices, ascending.
    pub fn surviving(&self) -> Vec<VertexId> {
        (0..self.alive.len()).filter(|&v| self.alive[v]).collect()
    }

    /// Surviving vertices with out-degree 0, ascending.
    pub fn sinks(&self) -> Vec<VertexId> {
        (0..self.alive.len())
            .filter(|&v| self.alive[v] && self.out_deg[v] == 0)
            .collect()
    }

    /// Deletes `v` and updates its neighbors' degrees.
    pub fn remove(&mut self, v: VertexId) {
        if !std::mem::replace(&mut self.alive[v], false) {
            return;
        }
        self.alive_count -= 1;
        self.in_deg[v] = 0;
        self.out_deg[v] = 0;
        for &w in self.tree.out_neighbors(v) {
            if self.alive[w] {
                self.in_deg[w] -= 1;
            }
        }
        for &u in self.tree.in_neighbors(v) {
            if self.alive[u] {
                self.out_deg[u] -= 1;
            }
        }
    }

    fn cuttable(&self, v: VertexId) -> bool {
        self.alive[v] && self.out_deg[v] == 0 && self.in_deg[v] == 1
    }

    /// Applies `k` cutting rounds in place.
    ///
    /// Cutting never changes in-degrees of survivors (an in-neighbor has an
    /// arc out, so it is not cuttable), so only the unique parent of a cut
    /// vertex can become cuttable next round.
    pub fn cut(&mut self, k: u32) {
        let mut round: Vec<VertexId> = (0..self.alive.len()).filter(|&v| self.cuttable(v)).collect();
        for _ in 0..k {
            if round.is_empty() {
                break;
            }
            let mut parents = Vec::new();
            for &v in &round {
                parents.extend(self.tree.in_neighbors(v).iter().copied().filter(|&p| self.alive[p]));
            }
            for &v in &round {
                self.remove(v);
            }
            parents.sort_unstable();
            parents.dedup();
            parents.retain(|&p| self.cuttable(p));
            round = parents;
        }
    }

    /// Consuming form of [`CutTree::cut`].
    pub fn cutting(mut self, k: u32) -> Self {
        self.cut(k);
        self
    }
}

/// `k` rounds of cutting applied to the whole tree.
pub fn b_cutting(t: &DirectedTree, k: u32) -> CutTree<'_> {
    CutTree::new(t).cutting(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_examples() {
        let chain = DirectedTree::chain(4);
        assert_eq!(b_cutting(&chain, 0).surviving(), vec![0, 1, 2, 3]);
        assert_eq!(b_cutting(&chain, 1).surviving(), vec![0, 1, 2]);
        assert_eq!(b_cutting(&chain, 3).surviving(), vec![0]);
        assert_eq!(b_cutting(&chain, 9).surviving(), vec![0]);
    }

    #[test]
    fn collider_never_cut() {
        let t = DirectedTree::new(3, [(0, 1), (2, 1)]).unwrap();
        assert_eq!(b_cutting(&t, 5).surviving(), vec![0, 1, 2]);
    }

    #[test]
    fn rounds_are_simultaneous() {
        // 0 -> 1 -> 2 and 0 -> 3: round one removes 2 and 3 only.
        let t = DirectedTree::new(4, [(0, 1), (1, 2), (0, 3)]).unwrap();
        let c = b_cutting(&t, 1);
        assert_eq!(c.surviving(), vec![0, 1]);
        assert_eq!(c.out_degree(0), 1);
        assert_eq!(c.sinks(), vec![1]);
    }

    #[test]
    fn composition() {
        let t = DirectedTree::new(
            8,
            [(0, 1), (1, 2), (2, 3), (1, 4), (5, 4), (4, 6), (6, 7)],
        )
        .unwrap();
        for a in 0..5 {
            for c in 0..5 {
                assert_eq!(b_cutting(&t, a).cutting(c), b_cutting(&t, a + c));
            }
        }
    }

    #[test]
    fn remove_updates_degrees() {
        let t = DirectedTree::new(3, [(0, 1), (2, 1)]).unwrap();
        let mut c = CutTree::new(&t);
        c.remove(0);
        assert_eq!(c.in_degree(1), 1);
        assert_eq!(c.len(), 2);
        c.remove(0);
        assert_eq!(c.len(), 2);
        assert_eq!(c, CutTree::from_alive(&t, vec![false, true, true]));
    }
}
