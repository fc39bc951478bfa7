//! DFS low-link machinery: articulation points, blocks, cactus test.

use super::{UndirectedGraph, VertexId};

const UNSEEN: u32 = u32::MAX;

struct LowLink {
    disc: Vec<u32>,
    low: Vec<u32>,
    last: Vec<u32>,
    parent: Vec<Option<VertexId>>,
    children: Vec<Vec<VertexId>>,
    blocks: Vec<Vec<(VertexId, VertexId)>>,
}

/// Iterative DFS over every vertex reachable from `starts` (in order).
fn lowlink(g: &UndirectedGraph, starts: impl IntoIterator<Item = VertexId>, keep_blocks: bool) -> LowLink {
    let n = g.n();
    let mut ll = LowLink {
        disc: vec![UNSEEN; n],
        low: vec![UNSEEN; n],
        last: vec![UNSEEN; n],
        parent: vec![None; n],
        children: vec![Vec::new(); n],
        blocks: Vec::new(),
    };
    let mut clock = 0u32;
    let mut stack: Vec<(VertexId, usize)> = Vec::new();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();

    for s in starts {
        if ll.disc[s] != UNSEEN {
            continue;
        }
        ll.disc[s] = clock;
        ll.low[s] = clock;
        clock += 1;
        stack.push((s, 0));
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            let nbrs = g.neighbors(v);
            if top.1 < nbrs.len() {
                let w = nbrs[top.1];
                top.1 += 1;
                if ll.disc[w] == UNSEEN {
                    ll.parent[w] = Some(v);
                    ll.children[v].push(w);
                    ll.disc[w] = clock;
                    ll.low[w] = clock;
                    clock += 1;
                    if keep_blocks {
                        edges.push((v, w));
                    }
                    stack.push((w, 0));
                } else if ll.parent[v] != Some(w) && ll.disc[w] < ll.disc[v] {
                    ll.low[v] = ll.low[v].min(ll.disc[w]);
                    if keep_blocks {
                        edges.push((v, w));
                    }
                }
            } else {
                stack.pop();
                ll.last[v] = clock - 1;
                if let Some(p) = ll.parent[v] {
                    ll.low[p] = ll.low[p].min(ll.low[v]);
                    if keep_blocks && ll.low[v] >= ll.disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edges.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        ll.blocks.push(block);
                    }
                }
            }
        }
    }
    ll
}

/// Rooted DFS tree with low-link values, used to answer separation queries.
#[derive(Debug, Clone)]
pub struct DfsTree {
    root: VertexId,
    disc: Vec<u32>,
    low: Vec<u32>,
    last: Vec<u32>,
    children: Vec<Vec<VertexId>>,
}

impl DfsTree {
    pub fn new(g: &UndirectedGraph, root: VertexId) -> Self {
        let ll = lowlink(g, [root], false);
        Self {
            root,
            disc: ll.disc,
            low: ll.low,
            last: ll.last,
            children: ll.children,
        }
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    fn in_subtree(&self, top: VertexId, v: VertexId) -> bool {
        self.disc[top] <= self.disc[v] && self.disc[v] <= self.last[top]
    }

    /// True when every path from `f` to the root passes through `v`.
    ///
    /// The root separates every other vertex from itself.
    pub fn separates(&self, v: VertexId, f: VertexId) -> bool {
        if self.disc[v] == UNSEEN || self.disc[f] == UNSEEN || v == f {
            return false;
        }
        if v == self.root {
            return true;
        }
        if !self.in_subtree(v, f) {
            return false;
        }
        let kids = &self.children[v];
        let idx = kids.partition_point(|&c| self.disc[c] <= self.disc[f]);
        let c = kids[idx - 1];
        debug_assert!(self.in_subtree(c, f));
        self.low[c] >= self.disc[v]
    }
}

/// Vertices whose removal disconnects their component, ascending.
pub fn articulation_points(g: &UndirectedGraph) -> Vec<VertexId> {
    let ll = lowlink(g, 0..g.n(), false);
    let mut out = Vec::new();
    for v in 0..g.n() {
        let cut = match ll.parent[v] {
            None => ll.children[v].len() >= 2,
            Some(_) => ll.children[v].iter().any(|&c| ll.low[c] >= ll.disc[v]),
        };
        if cut {
            out.push(v);
        }
    }
    out
}

/// Biconnected components as edge lists.
pub fn biconnected_components(g: &UndirectedGraph) -> Vec<Vec<(VertexId, VertexId)>> {
    lowlink(g, 0..g.n(), true).blocks
}

/// Every block is a single edge or a simple cycle.
///
/// A block is a cycle exactly when it has as many edges as vertices, so
/// the test reduces to `|E(B)| <= |V(B)|` for blocks with at least two edges.
pub fn is_cactus(g: &UndirectedGraph) -> bool {
    let mut seen = vec![usize::MAX; g.n()];
    biconnected_components(g).iter().enumerate().all(|(i, block)| {
        if block.len() == 1 {
            return true;
        }
        let mut verts = 0;
        for &(a, b) in block {
            for x in [a, b] {
                if seen[x] != i {
                    seen[x] = i;
                    verts += 1;
                }
            }
        }
        block.len() <= verts
    })
}
