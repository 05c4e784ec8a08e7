use thiserror::Error;

use crate::hypergraph::{EdgeId, NodeId};

/// Errors raised by hypergraph operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid identifier {0:?}: ids must be nonempty and contain no whitespace, ':' or '#'")]
    InvalidId(String),

    #[error("unknown node `{0}`")]
    UnknownNode(NodeId),

    #[error("unknown edge `{0}`")]
    UnknownEdge(EdgeId),

    #[error("duplicate {role} id `{id}`")]
    DuplicateId { role: &'static str, id: String },

    #[error("{role} order is not a permutation of the hypergraph's {role}s")]
    NotAPermutation { role: &'static str },

    #[error("rule `{rule}` is not applicable: {reason}")]
    InapplicableRule { rule: String, reason: String },

    #[error("{what} has size {size}, above the limit of {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid hypergraph: {0}")]
    Invalid(String),

    #[error("{0}")]
    Parameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
