//! Seeded random instances.
//!
//! All generators draw from `ChaCha8Rng::seed_from_u64(seed)`, so a seed
//! and a spec always give the same graph. Vertex ids are shuffled at the
//! end so that id order carries no structure.
//!
//! * Trees are random recursive trees: vertex `i` attaches to a uniformly
//!   chosen earlier vertex that still has fewer than `max_out_degree`
//!   children.
//! * Cacti start from such a tree and add chords `v - a`, where `a` is an
//!   ancestor of `v` two to nine levels up and no tree edge on the path
//!   between them is already in a cycle. About `cycle_fraction * n` chords
//!   are attempted.
//! * Polytrees orient the tree edges at random until at least two roots
//!   appear.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{BurnError, Result};
use crate::graph::{AnyGraph, DirectedTree, UndirectedGraph, VertexId};

/// Longest cycle a cactus chord may close.
const MAX_CYCLE: usize = 10;
const ORIENT_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    Cactus,
    Polytree,
    Arborescence,
}

impl GraphClass {
    pub const ALL: [GraphClass; 3] = [GraphClass::Cactus, GraphClass::Polytree, GraphClass::Arborescence];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Cactus => "cactus",
            GraphClass::Polytree => "polytree",
            GraphClass::Arborescence => "arborescence",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = BurnError;

    fn from_str(s: &str) -> Result<Self> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| BurnError::Infeasible(format!("unknown graph class `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub class: GraphClass,
    pub n: usize,
    pub seed: u64,
    /// Cactus only: chords attempted per vertex, in `[0, 1]`.
    pub cycle_fraction: f64,
    /// Children cap in the underlying tree, at least 1.
    pub max_out_degree: usize,
}

impl GenSpec {
    pub const DEFAULT_CYCLE_FRACTION: f64 = 0.08;
    pub const DEFAULT_MAX_OUT_DEGREE: usize = 4;

    pub fn new(class: GraphClass, n: usize, seed: u64) -> Self {
        Self {
            class,
            n,
            seed,
            cycle_fraction: Self::DEFAULT_CYCLE_FRACTION,
            max_out_degree: Self::DEFAULT_MAX_OUT_DEGREE,
        }
    }

    fn check(&self, class: GraphClass) -> Result<()> {
        if self.class != class {
            return Err(BurnError::Infeasible(format!(
                "spec is for {}, not {class}",
                self.class
            )));
        }
        if self.n == 0 {
            return Err(BurnError::Infeasible("n must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.cycle_fraction) {
            return Err(BurnError::Infeasible("cycle_fraction must lie in [0, 1]".into()));
        }
        if self.max_out_degree == 0 {
            return Err(BurnError::Infeasible("max_out_degree must be at least 1".into()));
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Parent of every vertex `1..n` in a degree-capped random recursive tree.
fn recursive_tree(rng: &mut ChaCha8Rng, n: usize, cap: usize) -> Vec<VertexId> {
    let mut parent = vec![0; n];
    let mut children = vec![0usize; n];
    let mut open = vec![0];
    for v in 1..n {
        let slot = rng.random_range(0..open.len());
        let p = open[slot];
        parent[v] = p;
        children[p] += 1;
        if children[p] == cap {
            open.swap_remove(slot);
        }
        open.push(v);
    }
    parent
}

fn permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<VertexId> {
    let mut p: Vec<VertexId> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn random_cactus(spec: &GenSpec) -> Result<UndirectedGraph> {
    spec.check(GraphClass::Cactus)?;
    let n = spec.n;
    let mut rng = spec.rng();
    let parent = recursive_tree(&mut rng, n, spec.max_out_degree);
    let mut depth = vec![0usize; n];
    for v in 1..n {
        depth[v] = depth[parent[v]] + 1;
    }

    let mut edges: Vec<(VertexId, VertexId)> = (1..n).map(|v| (parent[v], v)).collect();
    // in_cycle[v]: the tree edge parent[v] - v already lies on a cycle.
    let mut in_cycle = vec![false; n];
    let attempts = (spec.cycle_fraction * n as f64).round() as usize;
    for _ in 0..attempts {
        let v = rng.random_range(0..n);
        if depth[v] < 2 {
            continue;
        }
        let k = rng.random_range(2..=depth[v].min(MAX_CYCLE - 1));
        let mut a = v;
        let mut free = true;
        for _ in 0..k {
            free &= !in_cycle[a];
            a = parent[a];
        }
        if !free {
            continue;
        }
        let mut x = v;
        while x != a {
            in_cycle[x] = true;
            x = parent[x];
        }
        edges.push((a, v));
    }

    let perm = permutation(&mut rng, n);
    UndirectedGraph::new(n, edges.into_iter().map(|(a, b)| (perm[a], perm[b])))
}

pub fn random_arborescence(spec: &GenSpec) -> Result<DirectedTree> {
    spec.check(GraphClass::Arborescence)?;
    let n = spec.n;
    let mut rng = spec.rng();
    let parent = recursive_tree(&mut rng, n, spec.max_out_degree);
    let perm = permutation(&mut rng, n);
    DirectedTree::new(n, (1..n).map(|v| (perm[parent[v]], perm[v])))
}

/// Random orientation of a random tree with at least two roots when
/// `n >= 3`; smaller trees come out as arborescences.
pub fn random_polytree(spec: &GenSpec) -> Result<DirectedTree> {
    spec.check(GraphClass::Polytree)?;
    let n = spec.n;
    let mut rng = spec.rng();
    let parent = recursive_tree(&mut rng, n, spec.max_out_degree);
    let tree_edges: Vec<(VertexId, VertexId)> = (1..n).map(|v| (parent[v], v)).collect();

    let mut arcs = tree_edges.clone();
    if n >= 3 {
        let mut found = false;
        for _ in 0..ORIENT_ATTEMPTS {
            arcs = tree_edges
                .iter()
                .map(|&(a, b)| if rng.random_bool(0.5) { (a, b) } else { (b, a) })
                .collect();
            if root_count(n, &arcs) >= 2 {
                found = true;
                break;
            }
        }
        if !found {
            // Point every edge at a vertex of degree at least two.
            let mut deg = vec![0; n];
            for &(a, b) in &tree_edges {
                deg[a] += 1;
                deg[b] += 1;
            }
            let hub = (0..n).find(|&v| deg[v] >= 2).expect("a tree on 3+ vertices has one");
            for arc in &mut arcs {
                if arc.0 == hub {
                    *arc = (arc.1, arc.0);
                }
            }
        }
    }
    let perm = permutation(&mut rng, n);
    DirectedTree::new(n, arcs.into_iter().map(|(a, b)| (perm[a], perm[b])))
}

fn root_count(n: usize, arcs: &[(VertexId, VertexId)]) -> usize {
    let mut has_in = vec![false; n];
    for &(_, b) in arcs {
        has_in[b] = true;
    }
    has_in.iter().filter(|&&x| !x).count()
}

/// Generates the instance described by `spec`.
pub fn generate(spec: &GenSpec) -> Result<AnyGraph> {
    Ok(match spec.class {
        GraphClass::Cactus => random_cactus(spec)?.into(),
        GraphClass::Polytree => random_polytree(spec)?.into(),
        GraphClass::Arborescence => random_arborescence(spec)?.into(),
    })
}

/// `<dir>/<class>/n<n>_s<seed>.graph`.
pub fn fixture_path(dir: &Path, class: GraphClass, n: usize, seed: u64) -> PathBuf {
    dir.join(class.name()).join(format!("n{n}_s{seed}.graph"))
}
