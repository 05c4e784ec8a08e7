//! Hypergraph kernelization by edge- and node-domination.
//!
//! The two rules delete an edge that contains another edge, and a node whose
//! edges are all shared by another node. They terminate, and any two
//! reduction orders end in isomorphic minimal hypergraphs. This crate
//! implements the rules and reduction strategies ([`rewrite`]), canonical
//! forms and isomorphism ([`iso`]), an exact minimum hitting-set oracle
//! ([`hitting`]), document formats ([`format`]) and executable checks of
//! the rewriting system's properties ([`harness`]).

pub mod error;
pub mod fixtures;
pub mod format;
pub mod harness;
pub mod hitting;
pub mod hypergraph;
pub mod iso;
pub mod rewrite;

pub use error::{Error, Result};
pub use hitting::{is_hitting_set, min_hitting_set, min_hitting_set_bounded, HittingSetResult};
pub use hypergraph::{EdgeId, Hypergraph, IncidenceMatrix, NodeId, RawHypergraph, Violation};
pub use iso::{
    brute_force_isomorphic, canonical_form, is_isomorphic, CanonicalForm, CanonicalLabelling, Canonizer,
    IsomorphismWitness,
};
pub use rewrite::{
    apply, find_all, find_edge_dominations, find_node_dominations, is_minimal, reduce, step, ReductionTrace,
    RuleApplication, RuleKind, Strategy,
};
