//! Small named hypergraphs used throughout the tests, the CLI and the
//! benches.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Two nodes `v1`, `v2` sharing a single edge `e`. Either node can be
/// removed, giving two different but isomorphic minimal hypergraphs.
pub fn twin() -> Hypergraph {
    Hypergraph::from_edge_lists(["v1", "v2"], [("e", ["v1", "v2"])]).expect("valid fixture")
}

/// The 7-node, 7-edge chain on which exactly one rule applies at every step
/// and the rule kinds alternate. Same as `alternating_chain(7)`.
pub fn alternating() -> Hypergraph {
    alternating_chain(7).expect("valid fixture")
}

/// Three nodes and three edges where a node rule (`v3` by `v2`) and an edge
/// rule (`e2` by `e1`) diverge, then meet again after one more step each.
pub fn diverging() -> Hypergraph {
    Hypergraph::from_edge_lists(
        ["v1", "v2", "v3"],
        [("e1", vec!["v1"]), ("e2", vec!["v1", "v2"]), ("e3", vec!["v2", "v3"])],
    )
    .expect("valid fixture")
}

/// The chain family generalising [`alternating`].
///
/// Nodes `v1..vL` and edges `e1..eL`, with `v1` on `e1`, every `vi` (i ≥ 2)
/// on `e(i-1)` and `ei`, and `eL` closing a cycle back at node `vc`. The
/// result is a pendant path of `c - 1` edges hanging off a cycle of
/// `L - c + 1` nodes. Reduction eats the path from its free end, one forced
/// rule at a time, alternating node and edge rules, and stops at the cycle.
///
/// The path length is [`chain_trace_len`], the largest even number not above
/// `(L+1)/2`: an odd path would leave its last edge dominated by both cycle
/// edges at the attachment node, and the forced sequence would end in a
/// choice. `L = 7` gives `c = 5`.
pub fn alternating_chain(length: usize) -> Result<Hypergraph> {
    if length < 5 {
        return Err(Error::Parameter(format!(
            "chain length must be at least 5, got {length}"
        )));
    }
    let closure = chain_trace_len(length) + 1;
    let nodes: Vec<String> = (1..=length).map(|i| format!("v{i}")).collect();
    let edges = (1..=length).map(|j| {
        // ej holds vj and v(j+1); the last edge wraps to the attachment node
        let next = if j == length { closure } else { j + 1 };
        (format!("e{j}"), vec![format!("v{j}"), format!("v{next}")])
    });
    Hypergraph::from_edge_lists(nodes, edges)
}

/// Number of forced steps when reducing `alternating_chain(length)`.
pub fn chain_trace_len(length: usize) -> usize {
    2 * ((length + 1) / 4)
}
