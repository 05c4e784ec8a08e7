//! Instance builders shared by the benchmarks.

use hyperkernel::harness::{random_hypergraph, GeneratorParams};
use hyperkernel::Hypergraph;

/// Seeded random instance with `n` nodes and edges at most.
pub fn random_instance(n: usize, seed: u64) -> Hypergraph {
    random_hypergraph(&GeneratorParams {
        max_nodes: n,
        max_edges: n,
        density: 0.35,
        planted_dominations: n / 4,
        seed,
    })
    .expect("valid parameters")
}

/// `k` disjoint triangles: small but highly symmetric.
pub fn triangles(k: usize) -> Hypergraph {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for t in 0..k {
        for i in 0..3 {
            nodes.push(format!("v{t}_{i}"));
            edges.push((
                format!("e{t}_{i}"),
                vec![format!("v{t}_{i}"), format!("v{t}_{}", (i + 1) % 3)],
            ));
        }
    }
    Hypergraph::from_edge_lists(&nodes, edges).expect("valid ids")
}
