//! Exact minimum hitting sets for small hypergraphs.
//!
//! A hitting set is a set of nodes meeting every edge. A hypergraph with an
//! edge incident to no node has none.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, NodeId};

/// Default bound on `|V|` for [`min_hitting_set`].
pub const DEFAULT_MAX_NODES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HittingSetResult {
    Feasible { size: usize, witness: BTreeSet<NodeId> },
    Infeasible,
}

impl HittingSetResult {
    /// The minimum size, or `None` when no hitting set exists.
    pub fn size(&self) -> Option<usize> {
        match self {
            HittingSetResult::Feasible { size, .. } => Some(*size),
            HittingSetResult::Infeasible => None,
        }
    }
}

pub fn is_hitting_set(h: &Hypergraph, set: &BTreeSet<NodeId>) -> Result<bool> {
    if let Some(v) = set.iter().find(|v| !h.contains_node(v.as_str())) {
        return Err(Error::UnknownNode(v.clone()));
    }
    Ok(h.edges().all(|e| {
        h.incident_nodes(e.as_str())
            .expect("own edge")
            .iter()
            .any(|v| set.contains(v))
    }))
}

/// Minimum hitting set with the default node bound.
pub fn min_hitting_set(h: &Hypergraph) -> Result<HittingSetResult> {
    min_hitting_set_bounded(h, DEFAULT_MAX_NODES)
}

/// Minimum hitting set by branch and bound.
///
/// The search branches on the nodes of a smallest uncovered edge, heaviest
/// node first, with a greedy initial upper bound and a lower bound from a
/// greedy packing of pairwise disjoint uncovered edges. Among the minimum
/// sets the lexicographically least one (as a sorted id sequence) is
/// returned.
pub fn min_hitting_set_bounded(h: &Hypergraph, max_nodes: usize) -> Result<HittingSetResult> {
    // nodes are bit positions in a u64
    let limit = max_nodes.min(64);
    if h.node_count() > limit {
        return Err(Error::Capacity {
            what: "node set for exact hitting set",
            size: h.node_count(),
            limit,
        });
    }
    let inst = Instance::new(h);
    if inst.edges.contains(&0) {
        return Ok(HittingSetResult::Infeasible);
    }
    let size = inst.minimum_size();
    let chosen = inst
        .least_of_size(size)
        .expect("a hitting set of the minimum size exists");
    let nodes: Vec<&NodeId> = h.nodes().collect();
    let witness = (0..nodes.len())
        .filter(|&i| chosen & (1 << i) != 0)
        .map(|i| nodes[i].clone())
        .collect();
    Ok(HittingSetResult::Feasible { size, witness })
}

/// Nodes as bit positions in ascending id order, edges as node masks.
struct Instance {
    n: usize,
    edges: Vec<u64>,
    degree: Vec<usize>,
}

impl Instance {
    fn new(h: &Hypergraph) -> Self {
        let index: std::collections::HashMap<&str, usize> =
            h.nodes().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let edges: Vec<u64> = h
            .edges()
            .map(|e| {
                h.incident_nodes(e.as_str())
                    .expect("own edge")
                    .iter()
                    .fold(0u64, |m, v| m | 1 << index[v.as_str()])
            })
            .collect();
        let degree = (0..h.node_count())
            .map(|i| edges.iter().filter(|&&m| m & (1 << i) != 0).count())
            .collect();
        Instance {
            n: h.node_count(),
            edges,
            degree,
        }
    }

    fn uncovered(&self, chosen: u64) -> impl Iterator<Item = u64> + '_ {
        self.edges.iter().copied().filter(move |&m| m & chosen == 0)
    }

    /// Greedy packing of disjoint uncovered edges restricted to `allowed`.
    /// Each needs its own node, so the count is a lower bound. Returns
    /// `None` if some uncovered edge has no allowed node left.
    fn packing_bound(&self, chosen: u64, allowed: u64) -> Option<usize> {
        let mut open: Vec<u64> = self.uncovered(chosen).map(|m| m & allowed).collect();
        if open.contains(&0) {
            return None;
        }
        open.sort_by_key(|m| m.count_ones());
        let mut used = 0u64;
        let mut count = 0;
        for m in open {
            if m & used == 0 {
                used |= m;
                count += 1;
            }
        }
        Some(count)
    }

    fn greedy(&self) -> usize {
        let mut chosen = 0u64;
        let mut size = 0;
        while self.uncovered(chosen).next().is_some() {
            let best = (0..self.n)
                .filter(|&i| chosen & (1 << i) == 0)
                .max_by_key(|&i| {
                    (
                        self.uncovered(chosen).filter(|&m| m & (1 << i) != 0).count(),
                        std::cmp::Reverse(i),
                    )
                })
                .expect("an uncovered edge has a node");
            chosen |= 1 << best;
            size += 1;
        }
        size
    }

    fn minimum_size(&self) -> usize {
        let mut best = self.greedy();
        self.branch(0, 0, 0, &mut best);
        best
    }

    /// `excluded` marks nodes ruled out on this branch.
    fn branch(&self, chosen: u64, excluded: u64, size: usize, best: &mut usize) {
        let allowed = !excluded & self.mask();
        let Some(bound) = self.packing_bound(chosen, allowed) else {
            return;
        };
        if bound == 0 {
            *best = (*best).min(size);
            return;
        }
        if size + bound >= *best {
            return;
        }
        let edge = self
            .uncovered(chosen)
            .min_by_key(|m| (m & allowed).count_ones())
            .expect("bound > 0 means an uncovered edge")
            & allowed;
        let mut members: Vec<usize> = (0..self.n).filter(|&i| edge & (1 << i) != 0).collect();
        members.sort_by_key(|&i| (std::cmp::Reverse(self.degree[i]), i));
        // take members[k], having excluded members[..k]
        let mut excluded = excluded;
        for i in members {
            self.branch(chosen | 1 << i, excluded, size + 1, best);
            excluded |= 1 << i;
        }
    }

    fn mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Lexicographically least hitting set of exactly `size` nodes: decide
    /// nodes in id order, trying inclusion first.
    fn least_of_size(&self, size: usize) -> Option<u64> {
        self.least_from(0, 0, 0, size)
    }

    fn least_from(&self, next: usize, chosen: u64, excluded: u64, budget: usize) -> Option<u64> {
        let allowed = !excluded & self.mask();
        let need = self.packing_bound(chosen, allowed)?;
        if need > budget {
            return None;
        }
        if need == 0 {
            // pad with the smallest undecided ids: extra nodes never hurt
            let mut out = chosen;
            let mut left = budget;
            for i in next..self.n {
                if left == 0 {
                    break;
                }
                out |= 1 << i;
                left -= 1;
            }
            return (left == 0).then_some(out);
        }
        if next == self.n {
            return None;
        }
        if budget > 0 {
            if let Some(found) = self.least_from(next + 1, chosen | 1 << next, excluded, budget - 1) {
                return Some(found);
            }
        }
        self.least_from(next + 1, chosen, excluded | 1 << next, budget)
    }
}
