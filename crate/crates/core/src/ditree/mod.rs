//! Approximations for directed trees: 3 on polytrees, 2 and 1.905 on
//! arborescences.
//!
//! A guess `b` peels the tree from the bottom: after cutting `b - 1` rounds
//! of leaves, every sink of what survives roots a subtree of height at most
//! `b - 1`, which one fire of radius `b` burns. Each sink becomes a center
//! and its subtree is removed before the next peel.

pub mod cutting;
pub mod merge;

pub use cutting::{b_cutting, CutTree};
pub use merge::{merge_and_burn, s_certificate, Assignment, Merge, MergePlan, SCertificate};

use crate::burn::{assemble, ceil_range, CenterSets, Coef};
use crate::error::{BurnError, Result};
use crate::graph::{AncestorIndex, DirectedTree, VertexId};
use crate::{Approximation, BadGuess, GuessOutcome};

/// Centers split by their in-degree in the peeled tree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DitreeCenters {
    /// In-degree at most one.
    pub bs: Vec<VertexId>,
    /// In-degree above one.
    pub bs_join: Vec<VertexId>,
}

impl DitreeCenters {
    pub fn center_sets(&self, b: u32) -> CenterSets {
        CenterSets::new()
            .with_group("BS'", self.bs_join.clone(), b)
            .with_group("BS", self.bs.clone(), b)
    }
}

/// Peels `t` for guess `b`. With `limit`, stops with a bad guess once
/// either center list exceeds `b`.
fn peel(t: &DirectedTree, b: u32, limit: bool) -> std::result::Result<DitreeCenters, BadGuess> {
    let mut work = CutTree::new(t);
    let mut out = DitreeCenters::default();
    let mut stack = Vec::new();
    while !work.is_empty() {
        let peeled = work.clone().cutting(b - 1);
        for v in peeled.sinks() {
            if peeled.in_degree(v) <= 1 {
                out.bs.push(v);
            } else {
                out.bs_join.push(v);
            }
            // Everything below a sink was cut, so its subtree has height
            // at most b - 1 and the radius-b ball removes all of it.
            stack.push((v, 0));
            while let Some((x, d)) = stack.pop() {
                if !work.is_alive(x) {
                    continue;
                }
                if d < b {
                    stack.extend(t.out_neighbors(x).iter().map(|&w| (w, d + 1)));
                }
                work.remove(x);
            }
        }
        if limit {
            if out.bs.len() > b as usize {
                return Err(BadGuess::TooManyCenters);
            }
            if out.bs_join.len() > b as usize {
                return Err(BadGuess::TooManyJoinCenters);
            }
        }
    }
    Ok(out)
}

/// One guess of the polytree procedure.
pub fn centers_multirooted(t: &DirectedTree, b: u32) -> Result<GuessOutcome<CenterSets>> {
    if !t.is_polytree() {
        return Err(BurnError::NotPolytree);
    }
    Ok(multirooted_guess(t, b))
}

fn multirooted_guess(t: &DirectedTree, b: u32) -> GuessOutcome<CenterSets> {
    assert!(b >= 1, "guess must be positive");
    match peel(t, b, true) {
        Ok(c) => GuessOutcome::Success(c.center_sets(b)),
        Err(bad) => GuessOutcome::BadGuess(bad),
    }
}

/// 3-approximation for polytrees (2 on arborescences).
pub fn approx_polytree(t: &DirectedTree) -> Result<Approximation> {
    if !t.is_polytree() {
        return Err(BurnError::NotPolytree);
    }
    for b in 1.. {
        if let GuessOutcome::Success(cs) = multirooted_guess(t, b) {
            let schedule = assemble(t, &cs, cs.tight_length())?;
            return Ok(Approximation { schedule, b_star: b });
        }
    }
    unreachable!("guess b = |V| always succeeds")
}

/// [`approx_polytree`] restricted to arborescences.
pub fn approx_arborescence_2(t: &DirectedTree) -> Result<Approximation> {
    if !t.is_arborescence() {
        return Err(BurnError::NotArborescence);
    }
    approx_polytree(t)
}

/// Roots of disjoint subtrees of height at most `b - 1` covering `t`,
/// in peeling order.
pub fn centers_singlerooted(t: &DirectedTree, b: u32) -> Result<Vec<VertexId>> {
    if !t.is_arborescence() {
        return Err(BurnError::NotArborescence);
    }
    assert!(b >= 1, "guess must be positive");
    Ok(peel(t, b, false).expect("unlimited peel cannot fail").bs)
}

/// One guess of the 1.905 procedure: peel, then merge and burn.
pub fn arborescence_guess(t: &DirectedTree, b: u32) -> Result<GuessOutcome<MergePlan>> {
    if !t.is_arborescence() {
        return Err(BurnError::NotArborescence);
    }
    Ok(arborescence_guess_with(t, &AncestorIndex::new(t), b))
}

fn arborescence_guess_with(t: &DirectedTree, idx: &AncestorIndex, b: u32) -> GuessOutcome<MergePlan> {
    assert!(b >= 1, "guess must be positive");
    match peel(t, b, true) {
        Err(bad) => GuessOutcome::BadGuess(bad),
        Ok(c) => merge::merge_with_index(idx, b, &c.bs),
    }
}

/// 1.905-approximation for arborescences. The schedule has length at most
/// `ceil(1.905 b_star) + 1`.
pub fn approx_arborescence(t: &DirectedTree) -> Result<Approximation> {
    if !t.is_arborescence() {
        return Err(BurnError::NotArborescence);
    }
    let idx = AncestorIndex::new(t);
    for b in 1.. {
        if let GuessOutcome::Success(plan) = arborescence_guess_with(t, &idx, b) {
            let cs = plan.center_sets();
            let schedule = assemble(t, &cs, cs.tight_length())?;
            debug_assert!(schedule.len() as u32 <= ceil_range(b, Coef::ARB_BUDGET) + 1);
            return Ok(Approximation { schedule, b_star: b });
        }
    }
    unreachable!("guess b = |V| always succeeds")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burn::validate;

    fn star() -> DirectedTree {
        DirectedTree::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn multirooted_examples() {
        let one = DirectedTree::chain(1);
        let cs = centers_multirooted(&one, 1).unwrap().success().unwrap();
        assert_eq!(cs.group("BS").unwrap().centers, vec![0]);
        assert!(cs.group("BS'").unwrap().centers.is_empty());

        assert_eq!(
            centers_multirooted(&star(), 1).unwrap(),
            GuessOutcome::BadGuess(BadGuess::TooManyCenters)
        );
        let cs = centers_multirooted(&star(), 2).unwrap().success().unwrap();
        assert_eq!(cs.group("BS").unwrap().centers, vec![0]);
    }

    #[test]
    fn join_vertex_goes_to_bs_join() {
        // 0 -> 2 <- 1, 2 -> 3 -> 4.
        let t = DirectedTree::new(5, [(0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        // b = 2: centers 3, then 2 (in-degree 2), then both roots.
        assert_eq!(
            centers_multirooted(&t, 2).unwrap(),
            GuessOutcome::BadGuess(BadGuess::TooManyCenters)
        );
        let cs = centers_multirooted(&t, 3).unwrap().success().unwrap();
        assert_eq!(cs.group("BS").unwrap().centers, vec![0, 1]);
        assert_eq!(cs.group("BS'").unwrap().centers, vec![2]);
    }

    #[test]
    fn polytree_driver() {
        let a = approx_polytree(&DirectedTree::chain(1)).unwrap();
        assert_eq!(a.schedule.0, vec![0]);
        let chain = DirectedTree::chain(3);
        let a = approx_polytree(&chain).unwrap();
        assert!(validate(&chain, &a.schedule).is_accept());
        assert!(a.schedule.len() <= 6);
        let bad = DirectedTree::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(approx_polytree(&bad), Err(BurnError::NotPolytree));
    }

    #[test]
    fn singlerooted_examples() {
        assert_eq!(centers_singlerooted(&DirectedTree::chain(4), 2).unwrap(), vec![2, 0]);
        assert_eq!(centers_singlerooted(&DirectedTree::chain(1), 5).unwrap(), vec![0]);
        // Perfect binary out-tree of height 2.
        let t = DirectedTree::new(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(centers_singlerooted(&t, 3).unwrap(), vec![0]);
        assert_eq!(centers_singlerooted(&t, 2).unwrap(), vec![1, 2, 0]);
        let poly = DirectedTree::new(3, [(0, 1), (2, 1)]).unwrap();
        assert_eq!(centers_singlerooted(&poly, 1), Err(BurnError::NotArborescence));
    }

    #[test]
    fn peel_fixes_orphaned_subtrees() {
        // o -> q -> p, p -> w -> x, p -> u -> u2 -> u3, b = 3.
        let t = DirectedTree::new(8, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (6, 7)]).unwrap();
        let bs = centers_singlerooted(&t, 3).unwrap();
        let cs = CenterSets::new().with_group("BS", bs.clone(), 2);
        let s = assemble(&t, &cs, cs.tight_length().max(bs.len() + 2)).unwrap();
        assert!(validate(&t, &s).is_accept());
    }

    #[test]
    fn arborescence_drivers() {
        for n in 1..=12 {
            let chain = DirectedTree::chain(n);
            for a in [approx_arborescence(&chain).unwrap(), approx_arborescence_2(&chain).unwrap()] {
                assert!(validate(&chain, &a.schedule).is_accept());
            }
        }
        let a = approx_arborescence(&star()).unwrap();
        assert!(validate(&star(), &a.schedule).is_accept());
        let poly = DirectedTree::new(3, [(0, 1), (2, 1)]).unwrap();
        assert_eq!(approx_arborescence(&poly), Err(BurnError::NotArborescence));
        assert_eq!(approx_arborescence_2(&poly), Err(BurnError::NotArborescence));
    }
}
