//! 2.75-approximation for the burning number of cactus graphs.
//!
//! For a guess `b` the schedule budget is split into `ceil(0.25b)` ranges
//! of at least `ceil(1.75b)` and `ceil(0.75b)` ranges of at least `2b - 2`.
//! Starting from a cut vertex `r`, the procedure repeatedly takes the
//! farthest unmarked vertex `f`. If a cut vertex `v_k` separating `f` from
//! `r` sits at distance `[ceil(0.25b), ceil(1.75b)]` from `f`, the
//! `ceil(1.75b)`-ball of `v_k` already contains every unmarked vertex of
//! the `(2b-2)`-ball of `f`, so `v_k` spends a large range. Otherwise `f`
//! itself spends a small range. Running out of ranges certifies `b(G) > b`.

use crate::burn::{assemble, ceil_range, CenterSets, Coef};
use crate::error::{BurnError, Result};
use crate::graph::{
    articulation_points, bfs_distances, is_cactus, BallSearch, DfsTree, UndirectedGraph, VertexId,
};
use crate::oracle::cycle_formula;
use crate::{Approximation, BadGuess, BurningSchedule, GuessOutcome};

/// Mutable state of one guess.
#[derive(Debug, Clone)]
pub struct CactusGuessState {
    pub b: u32,
    /// Large ranges still available.
    pub b1: u32,
    /// Small ranges still available.
    pub b2: u32,
    pub marked: Vec<bool>,
    pub bs1: Vec<VertexId>,
    pub bs2: Vec<VertexId>,
}

/// Precomputed, guess-independent view of a cactus rooted at a cut vertex.
#[derive(Debug, Clone)]
pub struct CactusInstance<'g> {
    g: &'g UndirectedGraph,
    root: VertexId,
    dist: Vec<u32>,
    toward_root: Vec<VertexId>,
    dfs: DfsTree,
    // Vertices by decreasing distance from the root, ties by id.
    order: Vec<VertexId>,
}

impl<'g> CactusInstance<'g> {
    /// Roots the cactus at its smallest-id articulation point.
    pub fn new(g: &'g UndirectedGraph) -> Result<Self> {
        check_cactus(g)?;
        let root = *articulation_points(g)
            .first()
            .ok_or(BurnError::NoArticulationPoint)?;
        Ok(Self::rooted(g, root))
    }

    /// Roots the cactus at `root`, which should be an articulation point.
    pub fn with_root(g: &'g UndirectedGraph, root: VertexId) -> Result<Self> {
        check_cactus(g)?;
        if root >= g.n() {
            return Err(BurnError::InvalidVertex(root));
        }
        Ok(Self::rooted(g, root))
    }

    fn rooted(g: &'g UndirectedGraph, root: VertexId) -> Self {
        let dist: Vec<u32> = bfs_distances(g, root)
            .dist
            .into_iter()
            .map(|d| d.expect("connected"))
            .collect();
        let toward_root = (0..g.n())
            .map(|v| {
                if v == root {
                    return v;
                }
                *g.neighbors(v)
                    .iter()
                    .find(|&&w| dist[w] + 1 == dist[v])
                    .expect("BFS parent exists")
            })
            .collect();
        let mut order: Vec<VertexId> = (0..g.n()).collect();
        order.sort_by(|&a, &b| dist[b].cmp(&dist[a]).then(a.cmp(&b)));
        Self {
            g,
            root,
            dist,
            toward_root,
            dfs: DfsTree::new(g, root),
            order,
        }
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    /// The separating cut vertex on the shortest path from `f` toward the
    /// root whose distance from `f` lies in `[ceil(0.25b), ceil(1.75b)]`,
    /// preferring the one farthest from `f`.
    pub fn articulation_on_path(&self, f: VertexId, b: u32) -> Option<VertexId> {
        if f == self.root {
            return None;
        }
        let lo = ceil_range(b, Coef::QUARTER);
        let hi = ceil_range(b, Coef::SEVEN_QUARTERS).min(self.dist[f]);
        let mut best = None;
        let mut x = f;
        for step in 1..=hi {
            x = self.toward_root[x];
            if step >= lo && self.dfs.separates(x, f) {
                best = Some(x);
            }
        }
        best
    }

    pub fn burn_guess(&self, b: u32) -> GuessOutcome<CenterSets> {
        self.burn_guess_traced(b, |_, _, _| {})
    }

    /// Runs one guess; `on_bs1(state, f, v_k)` fires before each large-range
    /// selection marks its ball.
    pub fn burn_guess_traced<F>(&self, b: u32, mut on_bs1: F) -> GuessOutcome<CenterSets>
    where
        F: FnMut(&CactusGuessState, VertexId, VertexId),
    {
        assert!(b >= 1, "guess must be positive");
        let n = self.g.n();
        let large = ceil_range(b, Coef::SEVEN_QUARTERS);
        let small = 2 * b - 2;
        let mut st = CactusGuessState {
            b,
            b1: ceil_range(b, Coef::QUARTER),
            b2: ceil_range(b, Coef::THREE_QUARTERS),
            marked: vec![false; n],
            bs1: Vec::new(),
            bs2: Vec::new(),
        };
        let mut balls = BallSearch::new(n);
        let mut marked_count = 0;
        let mut cursor = 0;

        while marked_count < n {
            while st.marked[self.order[cursor]] {
                cursor += 1;
            }
            let f = self.order[cursor];
            let vk = self.articulation_on_path(f, b);
            let (center, radius) = match vk {
                Some(vk) if st.b1 >= 1 => {
                    on_bs1(&st, f, vk);
                    st.b1 -= 1;
                    st.bs1.push(vk);
                    (vk, large)
                }
                _ if st.b2 >= 1 => {
                    st.b2 -= 1;
                    st.bs2.push(f);
                    (f, small)
                }
                _ => {
                    let tag = if st.b1 == 0 {
                        BadGuess::BothExhausted
                    } else {
                        BadGuess::Budget2Exhausted
                    };
                    return GuessOutcome::BadGuess(tag);
                }
            };
            balls.for_each(self.g, center, radius, |v, _| {
                if !st.marked[v] {
                    st.marked[v] = true;
                    marked_count += 1;
                }
            });
        }
        GuessOutcome::Success(
            CenterSets::new()
                .with_group("BS1", st.bs1, large)
                .with_group("BS2", st.bs2, small),
        )
    }
}

fn check_cactus(g: &UndirectedGraph) -> Result<()> {
    if g.n() == 0 {
        return Err(BurnError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(BurnError::NotConnected);
    }
    if !is_cactus(g) {
        return Err(BurnError::NotCactus);
    }
    Ok(())
}

/// Stand-alone form of [`CactusInstance::articulation_on_path`] for root `r`.
pub fn articulation_on_path(
    g: &UndirectedGraph,
    f: VertexId,
    r: VertexId,
    b: u32,
) -> Result<Option<VertexId>> {
    if f >= g.n() {
        return Err(BurnError::InvalidVertex(f));
    }
    Ok(CactusInstance::with_root(g, r)?.articulation_on_path(f, b))
}

/// One guess on a cactus with at least one articulation point.
pub fn burn_guess_cactus(g: &UndirectedGraph, b: u32) -> Result<GuessOutcome<CenterSets>> {
    Ok(CactusInstance::new(g)?.burn_guess(b))
}

/// Tries `b = 1, 2, ...` and assembles the schedule of the first success.
///
/// Cacti without an articulation point are a vertex, an edge or a cycle and
/// are solved directly.
pub fn approx_cactus(g: &UndirectedGraph) -> Result<Approximation> {
    check_cactus(g)?;
    let n = g.n();
    if n == 1 {
        return Ok(Approximation {
            schedule: BurningSchedule(vec![0]),
            b_star: 1,
        });
    }
    let inst = match CactusInstance::new(g) {
        Ok(inst) => inst,
        Err(BurnError::NoArticulationPoint) => return Ok(burn_without_cut_vertex(g)),
        Err(e) => return Err(e),
    };
    for b in 1.. {
        if let GuessOutcome::Success(centers) = inst.burn_guess(b) {
            let schedule = assemble(g, &centers, centers.tight_length())?;
            return Ok(Approximation { schedule, b_star: b });
        }
    }
    unreachable!("guess b = |V| always succeeds")
}

fn burn_without_cut_vertex(g: &UndirectedGraph) -> Approximation {
    if g.n() == 2 {
        let cs = CenterSets::new().with_group("edge", vec![0], 1);
        return Approximation {
            schedule: assemble(g, &cs, 2).expect("edge burns in two rounds"),
            b_star: 2,
        };
    }
    let b = cycle_formula(g.n());
    Approximation {
        schedule: cycle_schedule(g, b),
        b_star: b,
    }
}

/// Optimal schedule for a cycle: consecutive arcs of `2r + 1` vertices for
/// radii `b-1, ..., 0`, each burned from its middle.
fn cycle_schedule(g: &UndirectedGraph, b: u32) -> BurningSchedule {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let (mut prev, mut cur) = (usize::MAX, 0);
    for _ in 0..n {
        order.push(cur);
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    let mut cs = CenterSets::new();
    let mut start = 0usize;
    for i in 0..b {
        if start >= n {
            break;
        }
        let r = b - 1 - i;
        let mid = (start + r as usize).min(n - 1);
        cs = cs.with_group("arc", vec![order[mid]], r);
        start += 2 * r as usize + 1;
    }
    assemble(g, &cs, b as usize).expect("arcs cover the cycle")
}
