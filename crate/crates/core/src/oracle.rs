//! Ground truth: exact burning number, closed forms and the classic
//! 3-approximation for general graphs.

use crate::burn::{assemble, validate, CenterSets};
use crate::error::{BurnError, Result};
use crate::graph::{Adjacency, BallSearch, UndirectedGraph};
use crate::{Approximation, BadGuess, BurningSchedule, GuessOutcome};

/// Default largest vertex count the exact search accepts.
pub const DEFAULT_ORACLE_CAP: usize = 14;
/// Hard limit: coverage sets are 64-bit masks.
pub const MAX_ORACLE_CAP: usize = 64;
/// Default node-expansion budget.
pub const DEFAULT_BUDGET: u64 = 50_000_000;
pub const ORACLE_CAP_ENV: &str = "BURNLAB_ORACLE_CAP";

/// Size cap from `BURNLAB_ORACLE_CAP`, clamped to [`MAX_ORACLE_CAP`].
pub fn oracle_cap() -> usize {
    std::env::var(ORACLE_CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map_or(DEFAULT_ORACLE_CAP, |c| c.min(MAX_ORACLE_CAP))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub b: u32,
    pub witness: BurningSchedule,
}

/// Exact burning number with the environment cap and default budget.
pub fn exact_burning_number<G: Adjacency + ?Sized>(g: &G) -> Result<ExactResult> {
    exact_burning_number_with(g, oracle_cap(), DEFAULT_BUDGET)
}

/// Exact burning number by iterative deepening on the schedule length.
///
/// A length-`L` schedule exists iff some `x_0, ..., x_{L-1}` has balls
/// `N_{L-1-i}[x_i]` covering every vertex. Covers that break the
/// "unburned when chosen" rule are repaired by [`assemble`], since a
/// center already on fire lies inside a larger earlier ball. Directed
/// graphs use out-balls.
pub fn exact_burning_number_with<G: Adjacency + ?Sized>(g: &G, cap: usize, budget: u64) -> Result<ExactResult> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(BurnError::EmptyGraph);
    }
    let cap = cap.min(MAX_ORACLE_CAP);
    if n > cap {
        return Err(BurnError::TooLarge { n, cap });
    }

    // balls[r][v] for r < n; radius n-1 already reaches everything reachable.
    let mut search = BallSearch::new(n);
    let balls: Vec<Vec<u64>> = (0..n as u32)
        .map(|r| {
            (0..n)
                .map(|v| {
                    let mut m = 0u64;
                    search.for_each(g, v, r, |w, _| m |= 1 << w);
                    m
                })
                .collect()
        })
        .collect();
    let max_ball: Vec<u32> = balls
        .iter()
        .map(|row| row.iter().map(|m| m.count_ones()).max().unwrap())
        .collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    let mut s = Search {
        balls: &balls,
        max_ball: &max_ball,
        full,
        expansions: 0,
        budget,
        picks: Vec::new(),
    };
    for len in 1..=n {
        if s.reach_bound(len, 0) < n as u32 {
            continue;
        }
        s.picks.clear();
        if s.dfs(len, 0, 0)? {
            let cs = s.picks.iter().enumerate().fold(CenterSets::new(), |cs, (i, &v)| {
                cs.with_group("exact", vec![v], (len - 1 - i) as u32)
            });
            let witness = assemble(g, &cs, len)?;
            debug_assert!(validate(g, &witness).is_accept());
            debug_assert_eq!(witness.len(), len);
            return Ok(ExactResult {
                b: len as u32,
                witness,
            });
        }
    }
    unreachable!("every vertex as its own source always works")
}

struct Search<'a> {
    balls: &'a [Vec<u64>],
    max_ball: &'a [u32],
    full: u64,
    expansions: u64,
    budget: u64,
    picks: Vec<usize>,
}

impl Search<'_> {
    /// Most vertices positions `pos..len` could still cover.
    fn reach_bound(&self, len: usize, pos: usize) -> u32 {
        (0..len - pos).map(|r| self.max_ball[r]).sum()
    }

    fn dfs(&mut self, len: usize, pos: usize, covered: u64) -> Result<bool> {
        if covered == self.full {
            return Ok(true);
        }
        if pos == len {
            return Ok(false);
        }
        let missing = (self.full & !covered).count_ones();
        if self.reach_bound(len, pos) < missing {
            return Ok(false);
        }
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(BurnError::BudgetExceeded(self.budget));
        }

        let radius = len - 1 - pos;
        let row = &self.balls[radius];
        let mut cands: Vec<(u64, usize)> = (0..row.len())
            .map(|v| (row[v] & !covered, v))
            .filter(|&(gain, _)| gain != 0)
            .collect();
        cands.sort_by(|a, b| b.0.count_ones().cmp(&a.0.count_ones()).then(a.1.cmp(&b.1)));
        // Drop candidates whose new coverage is contained in an earlier one's.
        let mut kept: Vec<(u64, usize)> = Vec::with_capacity(cands.len());
        for (gain, v) in cands {
            if !kept.iter().any(|&(k, _)| gain & !k == 0) {
                kept.push((gain, v));
            }
        }
        for (gain, v) in kept {
            self.picks.push(v);
            if self.dfs(len, pos + 1, covered | gain)? {
                return Ok(true);
            }
            self.picks.pop();
        }
        Ok(false)
    }
}

/// Burning number of the cycle (or path) on `n` vertices: `ceil(sqrt(n))`.
pub fn cycle_formula(n: usize) -> u32 {
    let r = n.isqrt();
    (if r * r == n { r } else { r + 1 }) as u32
}

/// One guess of the baseline: greedy centers pairwise at distance `>= 2b - 1`.
pub fn baseline_guess(g: &UndirectedGraph, b: u32) -> GuessOutcome<CenterSets> {
    assert!(b >= 1, "guess must be positive");
    let n = g.n();
    let radius = 2 * b - 2;
    let mut marked = vec![false; n];
    let mut search = BallSearch::new(n);
    let mut centers = Vec::new();
    let mut next = 0;
    loop {
        while next < n && marked[next] {
            next += 1;
        }
        if next == n {
            break;
        }
        if centers.len() == b as usize {
            return GuessOutcome::BadGuess(BadGuess::TooManySpreadCenters);
        }
        centers.push(next);
        search.for_each(g, next, radius, |v, _| marked[v] = true);
    }
    GuessOutcome::Success(CenterSets::new().with_group("spread", centers, radius))
}

/// Classic 3-approximation for connected graphs: linear search on `b`.
pub fn baseline_3approx(g: &UndirectedGraph) -> Result<Approximation> {
    if g.n() == 0 {
        return Err(BurnError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(BurnError::NotConnected);
    }
    for b in 1.. {
        if let GuessOutcome::Success(cs) = baseline_guess(g, b) {
            let schedule = assemble(g, &cs, cs.tight_length())?;
            return Ok(Approximation { schedule, b_star: b });
        }
    }
    unreachable!("guess b = |V| always succeeds")
}
