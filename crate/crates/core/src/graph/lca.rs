//! Lowest common ancestors in directed trees.

use std::collections::VecDeque;

use super::{DirectedTree, VertexId};

/// Shape of the unique undirected path between `u` and `v` in a polytree:
/// the apex vertex and its directed distances to `u` and `v`.
fn apex(t: &DirectedTree, u: VertexId, v: VertexId) -> Option<(VertexId, u32, u32)> {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &y in t.out_neighbors(x).iter().chain(t.in_neighbors(x)) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if parent[v] == usize::MAX {
        return None;
    }
    let mut path = vec![v];
    while *path.last().unwrap() != u {
        let x = *path.last().unwrap();
        path.push(parent[x]);
    }
    path.reverse();

    // Arcs along u -> v must read: backward ... backward, forward ... forward.
    let mut backward = 0usize;
    let mut seen_forward = false;
    for w in path.windows(2) {
        let forward = t.out_neighbors(w[0]).binary_search(&w[1]).is_ok();
        if forward {
            seen_forward = true;
        } else if seen_forward {
            return None;
        } else {
            backward += 1;
        }
    }
    let len = path.len() - 1;
    Some((path[backward], backward as u32, (len - backward) as u32))
}

/// Deepest vertex from which both `u` and `v` are reachable, if any.
///
/// In a polytree the common ancestors of two vertices, when they exist,
/// all reach the apex of the path joining them, so the apex is the answer.
pub fn lca(t: &DirectedTree, u: VertexId, v: VertexId) -> Option<VertexId> {
    apex(t, u, v).map(|(w, _, _)| w)
}

/// `max(d(lca, u), d(lca, v))`, or `None` when there is no common ancestor.
pub fn lca_length(t: &DirectedTree, u: VertexId, v: VertexId) -> Option<u32> {
    apex(t, u, v).map(|(_, du, dv)| du.max(dv))
}

/// Binary-lifting ancestor table for an arborescence.
#[derive(Debug, Clone)]
pub struct AncestorIndex {
    depth: Vec<u32>,
    up: Vec<Vec<VertexId>>,
}

impl AncestorIndex {
    /// Caller guarantees `t` is an arborescence.
    pub fn new(t: &DirectedTree) -> Self {
        let n = t.n();
        let root = t.roots()[0];
        let mut depth = vec![0u32; n];
        let mut parent = vec![root; n];
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in t.out_neighbors(x) {
                depth[y] = depth[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
        let levels = (usize::BITS - n.max(1).leading_zeros()) as usize;
        let mut up = vec![parent];
        for k in 1..levels.max(1) {
            let prev = &up[k - 1];
            let next = (0..n).map(|v| prev[prev[v]]).collect();
            up.push(next);
        }
        Self { depth, up }
    }

    pub fn depth(&self, v: VertexId) -> u32 {
        self.depth[v]
    }

    fn lift(&self, mut v: VertexId, mut steps: u32) -> VertexId {
        let mut k = 0;
        while steps > 0 {
            if steps & 1 == 1 {
                v = self.up[k][v];
            }
            steps >>= 1;
            k += 1;
        }
        v
    }

    pub fn lca(&self, u: VertexId, v: VertexId) -> VertexId {
        let (mut a, mut b) = (u, v);
        if self.depth[a] < self.depth[b] {
            std::mem::swap(&mut a, &mut b);
        }
        a = self.lift(a, self.depth[a] - self.depth[b]);
        if a == b {
            return a;
        }
        for k in (0..self.up.len()).rev() {
            if self.up[k][a] != self.up[k][b] {
                a = self.up[k][a];
                b = self.up[k][b];
            }
        }
        self.up[0][a]
    }

    pub fn lca_length(&self, u: VertexId, v: VertexId) -> u32 {
        let w = self.depth[self.lca(u, v)];
        (self.depth[u] - w).max(self.depth[v] - w)
    }
}
