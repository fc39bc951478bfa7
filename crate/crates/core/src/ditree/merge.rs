//! Merge-and-burn: pairs of nearby subtree roots share one larger fire
//! lit at their lowest common ancestor.

use std::collections::BTreeSet;

use crate::burn::{ceil_range, CenterSets, Coef};
use crate::error::{BurnError, Result};
use crate::graph::{AncestorIndex, DirectedTree, VertexId};
use crate::{BadGuess, GuessOutcome};

/// An unmerged center and the range it was given.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Assignment {
    pub center: VertexId,
    pub range: u32,
}

/// Two centers replaced by their lowest common ancestor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Merge {
    pub lca: VertexId,
    pub pair: (VertexId, VertexId),
    pub range: u32,
}

/// Outcome of a successful merge-and-burn pass for guess `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergePlan {
    pub b: u32,
    /// Unmerged centers, in scan order.
    pub unmerged: Vec<Assignment>,
    pub merges: Vec<Merge>,
    /// Ranges of `{0, ..., ceil(1.905b)}` left over, ascending.
    pub unused: Vec<u32>,
}

impl MergePlan {
    pub fn bs1(&self) -> Vec<VertexId> {
        self.unmerged.iter().map(|a| a.center).collect()
    }

    pub fn bs2(&self) -> Vec<VertexId> {
        self.merges.iter().map(|m| m.lca).collect()
    }

    /// LCA centers with radius `ceil(1.81b)`, then unmerged ones with radius `b`.
    pub fn center_sets(&self) -> CenterSets {
        CenterSets::new()
            .with_group("BS2", self.bs2(), ceil_range(self.b, Coef::MERGE_RANGE))
            .with_group("BS1", self.bs1(), self.b)
    }
}

/// Runs merge-and-burn on the centers of [`super::centers_singlerooted`].
pub fn merge_and_burn(t: &DirectedTree, b: u32, bs: &[VertexId]) -> Result<GuessOutcome<MergePlan>> {
    if !t.is_arborescence() {
        return Err(BurnError::NotArborescence);
    }
    if let Some(&v) = bs.iter().find(|&&v| v >= t.n()) {
        return Err(BurnError::InvalidVertex(v));
    }
    Ok(merge_with_index(&AncestorIndex::new(t), b, bs))
}

pub(crate) fn merge_with_index(idx: &AncestorIndex, b: u32, bs: &[VertexId]) -> GuessOutcome<MergePlan> {
    assert!(b >= 1, "guess must be positive");
    let reach = ceil_range(b, Coef::MERGE_REACH);
    let big = ceil_range(b, Coef::MERGE_RANGE);
    let mut ranges: BTreeSet<u32> = (0..=ceil_range(b, Coef::ARB_BUDGET)).collect();
    let mut open = vec![true; bs.len()];
    let mut plan = MergePlan {
        b,
        unmerged: Vec::new(),
        merges: Vec::new(),
        unused: Vec::new(),
    };

    for i in 0..bs.len() {
        if !open[i] {
            continue;
        }
        open[i] = false;
        let u = bs[i];
        let mut merged = false;
        for j in i + 1..bs.len() {
            if !open[j] || idx.lca_length(u, bs[j]) > reach {
                continue;
            }
            let Some(&range) = ranges.range(big..).next() else {
                break;
            };
            ranges.remove(&range);
            open[j] = false;
            plan.merges.push(Merge {
                lca: idx.lca(u, bs[j]),
                pair: (u, bs[j]),
                range,
            });
            merged = true;
            break;
        }
        if !merged {
            let Some(&range) = ranges.range(b..).next() else {
                return GuessOutcome::BadGuess(BadGuess::RangesExhausted);
            };
            ranges.remove(&range);
            plan.unmerged.push(Assignment { center: u, range });
        }
    }
    plan.unused = ranges.into_iter().collect();
    GuessOutcome::Success(plan)
}

/// Lower-bound certificate from the middle sections of unmerged subtrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SCertificate {
    pub b: u32,
    /// `b(b+1)/2`: the most vertices of `S` any `b` fires can reach.
    pub s_b: u64,
    /// Size of the union of trimmed paths.
    pub s_size: usize,
    pub paths: Vec<Vec<VertexId>>,
}

/// For every center, takes the deepest downward path of (up to) `b`
/// vertices and trims `ceil(0.19b)` vertices from each end.
pub fn s_certificate(t: &DirectedTree, b: u32, unmerged: &[VertexId]) -> SCertificate {
    let n = t.n();
    let mut height = vec![0u32; n];
    let order = post_order(t);
    for &v in &order {
        height[v] = t.out_neighbors(v).iter().map(|&w| height[w] + 1).max().unwrap_or(0);
    }
    let trim = ceil_range(b, Coef::PATH_TRIM) as usize;
    let mut in_s = vec![false; n];
    let mut paths = Vec::new();
    for &c in unmerged {
        let mut path = vec![c];
        let mut x = c;
        while path.len() < b as usize {
            let Some(&next) = t
                .out_neighbors(x)
                .iter()
                .max_by(|&&p, &&q| height[p].cmp(&height[q]).then(q.cmp(&p)))
            else {
                break;
            };
            path.push(next);
            x = next;
        }
        let mid = if path.len() > 2 * trim {
            path[trim..path.len() - trim].to_vec()
        } else {
            Vec::new()
        };
        for &v in &mid {
            in_s[v] = true;
        }
        paths.push(mid);
    }
    let b64 = b as u64;
    SCertificate {
        b,
        s_b: b64 * (b64 + 1) / 2,
        s_size: in_s.iter().filter(|&&x| x).count(),
        paths,
    }
}

/// Children before parents.
fn post_order(t: &DirectedTree) -> Vec<VertexId> {
    let mut order = Vec::with_capacity(t.n());
    let mut stack = t.roots();
    while let Some(v) = stack.pop() {
        order.push(v);
        stack.extend_from_slice(t.out_neighbors(v));
    }
    order.reverse();
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fork_merges_at_root() {
        // r=0 -> u=1 -> 3, r -> v=2 -> 4; b = 2.
        let t = DirectedTree::new(5, [(0, 1), (0, 2), (1, 3), (2, 4)]).unwrap();
        let plan = merge_and_burn(&t, 2, &[1, 2]).unwrap().success().unwrap();
        assert_eq!(plan.bs2(), vec![0]);
        assert!(plan.bs1().is_empty());
        assert_eq!(plan.merges[0].range, 4);
        assert_eq!(plan.unused, vec![0, 1, 2, 3]);
    }

    #[test]
    fn single_center_takes_smallest_range() {
        let t = DirectedTree::chain(3);
        let plan = merge_and_burn(&t, 2, &[0]).unwrap().success().unwrap();
        assert_eq!(plan.unmerged, vec![Assignment { center: 0, range: 2 }]);
    }

    #[test]
    fn exhausted_ranges() {
        // b = 1: ranges {0, 1, 2}; three far-apart leaves of a deep tree.
        let t = DirectedTree::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let out = merge_and_burn(&t, 1, &[2, 4, 6]).unwrap();
        assert_eq!(out, GuessOutcome::BadGuess(BadGuess::RangesExhausted));
    }

    #[test]
    fn rejects_polytree() {
        let t = DirectedTree::new(3, [(0, 1), (2, 1)]).unwrap();
        assert_eq!(merge_and_burn(&t, 1, &[1]), Err(BurnError::NotArborescence));
    }

    #[test]
    fn certificate_trims_paths() {
        let t = DirectedTree::chain(30);
        let c = s_certificate(&t, 11, &[12]);
        assert_eq!(c.paths, vec![(15..=19).collect::<Vec<_>>()]);
        assert_eq!(c.s_size, 5);
        assert_eq!(c.s_b, 66);

        let one = s_certificate(&DirectedTree::chain(1), 1, &[0]);
        assert_eq!(one.s_b, 1);
        assert_eq!(one.s_size, 0);
        let none = s_certificate(&t, 4, &[]);
        assert_eq!(none.s_size, 0);
        assert_eq!(none.s_b, 10);
    }
}
