//! The hypergraph data model.
//!
//! A hypergraph is a triple of a node set, an edge set and an incidence
//! relation between them. Two edges may be incident to exactly the same
//! nodes, so this is a multi-hypergraph in the set-of-subsets view. Edges
//! with no nodes and nodes with no edges are legal.
//!
//! Values are persistent: every deletion returns a new hypergraph and leaves
//! its input untouched.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn check_id(raw: &str) -> Result<()> {
    if raw.is_empty()
        || raw
            .chars()
            .any(|c| c.is_whitespace() || c.is_control() || c == ':' || c == '#')
    {
        return Err(Error::InvalidId(raw.to_string()));
    }
    Ok(())
}

macro_rules! id_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(try_from = "String", into = "String")]
        pub struct $name(String);

        impl $name {
            pub fn new(raw: impl Into<String>) -> Result<Self> {
                let raw = raw.into();
                check_id(&raw)?;
                Ok(Self(raw))
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", stringify!($name), self.0)
            }
        }

        impl TryFrom<String> for $name {
            type Error = Error;

            fn try_from(raw: String) -> Result<Self> {
                Self::new(raw)
            }
        }

        impl TryFrom<&str> for $name {
            type Error = Error;

            fn try_from(raw: &str) -> Result<Self> {
                Self::new(raw)
            }
        }

        impl From<$name> for String {
            fn from(id: $name) -> String {
                id.0
            }
        }

        impl AsRef<str> for $name {
            fn as_ref(&self) -> &str {
                &self.0
            }
        }

        impl std::borrow::Borrow<str> for $name {
            fn borrow(&self) -> &str {
                &self.0
            }
        }
    };
}

id_type!(
    /// Identifier of a node. Ordered lexicographically.
    NodeId
);
id_type!(
    /// Identifier of a hyperedge. Ordered lexicographically.
    EdgeId
);

/// An unchecked description of a hypergraph, as read from outside.
///
/// Unlike [`Hypergraph`] it may break invariants (duplicates, dangling
/// incidence pairs); [`RawHypergraph::validate`] lists what is wrong.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawHypergraph {
    pub nodes: Vec<NodeId>,
    pub edges: Vec<EdgeId>,
    pub incidence: Vec<(NodeId, EdgeId)>,
}

/// One broken hypergraph invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateNode(NodeId),
    DuplicateEdge(EdgeId),
    DuplicateIncidence(NodeId, EdgeId),
    MissingNode {
        node: NodeId,
        edge: EdgeId,
    },
    MissingEdge {
        node: NodeId,
        edge: EdgeId,
    },
    /// The node-side and edge-side views of the incidence relation disagree.
    Asymmetric {
        node: NodeId,
        edge: EdgeId,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateNode(v) => write!(f, "node `{v}` listed more than once"),
            Violation::DuplicateEdge(e) => write!(f, "edge `{e}` listed more than once"),
            Violation::DuplicateIncidence(v, e) => {
                write!(f, "incidence pair ({v}, {e}) listed more than once")
            }
            Violation::MissingNode { node, edge } => {
                write!(f, "incidence pair ({node}, {edge}) references missing node `{node}`")
            }
            Violation::MissingEdge { node, edge } => {
                write!(f, "incidence pair ({node}, {edge}) references missing edge `{edge}`")
            }
            Violation::Asymmetric { node, edge } => {
                write!(f, "incidence pair ({node}, {edge}) is recorded on one side only")
            }
        }
    }
}

impl RawHypergraph {
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut nodes = BTreeSet::new();
        for v in &self.nodes {
            if !nodes.insert(v) {
                out.push(Violation::DuplicateNode(v.clone()));
            }
        }
        let mut edges = BTreeSet::new();
        for e in &self.edges {
            if !edges.insert(e) {
                out.push(Violation::DuplicateEdge(e.clone()));
            }
        }
        let mut pairs = BTreeSet::new();
        for (v, e) in &self.incidence {
            if !pairs.insert((v, e)) {
                out.push(Violation::DuplicateIncidence(v.clone(), e.clone()));
            }
            if !nodes.contains(v) {
                out.push(Violation::MissingNode {
                    node: v.clone(),
                    edge: e.clone(),
                });
            }
            if !edges.contains(e) {
                out.push(Violation::MissingEdge {
                    node: v.clone(),
                    edge: e.clone(),
                });
            }
        }
        out
    }
}

/// A finite hypergraph `(V, E, I)`.
///
/// The incidence relation is stored twice, once per role, so that both
/// `E(v)` and `V(e)` are direct lookups.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    node_edges: BTreeMap<NodeId, BTreeSet<EdgeId>>,
    edge_nodes: BTreeMap<EdgeId, BTreeSet<NodeId>>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("Hypergraph");
        s.field("nodes", &self.node_edges.keys().map(|v| v.as_str()).collect::<Vec<_>>());
        s.field(
            "edges",
            &self
                .edge_nodes
                .iter()
                .map(|(e, vs)| (e.as_str(), vs.iter().map(|v| v.as_str()).collect::<Vec<_>>()))
                .collect::<Vec<_>>(),
        );
        s.finish()
    }
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        if let Some(first) = raw.validate().into_iter().next() {
            return Err(match first {
                Violation::DuplicateNode(v) => Error::DuplicateId {
                    role: "node",
                    id: v.to_string(),
                },
                Violation::DuplicateEdge(e) => Error::DuplicateId {
                    role: "edge",
                    id: e.to_string(),
                },
                Violation::MissingNode { node, .. } => Error::UnknownNode(node),
                Violation::MissingEdge { edge, .. } => Error::UnknownEdge(edge),
                other => Error::Invalid(other.to_string()),
            });
        }
        let mut h = Hypergraph::default();
        for v in raw.nodes {
            h.node_edges.insert(v, BTreeSet::new());
        }
        for e in raw.edges {
            h.edge_nodes.insert(e, BTreeSet::new());
        }
        for (v, e) in raw.incidence {
            h.node_edges.get_mut(&v).expect("validated").insert(e.clone());
            h.edge_nodes.get_mut(&e).expect("validated").insert(v);
        }
        Ok(h)
    }
}

impl Hypergraph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a hypergraph from a node list and edges given as node lists.
    ///
    /// ```
    /// use hyperkernel::Hypergraph;
    /// let h = Hypergraph::from_edge_lists(["v1", "v2"], [("e", vec!["v1", "v2"])]).unwrap();
    /// assert_eq!(h.incidence_count(), 2);
    /// ```
    pub fn from_edge_lists<N, E, S, L>(nodes: N, edges: E) -> Result<Self>
    where
        N: IntoIterator,
        N::Item: AsRef<str>,
        E: IntoIterator<Item = (S, L)>,
        S: AsRef<str>,
        L: IntoIterator,
        L::Item: AsRef<str>,
    {
        let mut raw = RawHypergraph::default();
        for v in nodes {
            raw.nodes.push(NodeId::new(v.as_ref())?);
        }
        for (e, members) in edges {
            let e = EdgeId::new(e.as_ref())?;
            for v in members {
                raw.incidence.push((NodeId::new(v.as_ref())?, e.clone()));
            }
            raw.edges.push(e);
        }
        Hypergraph::try_from(raw)
    }

    pub fn to_raw(&self) -> RawHypergraph {
        RawHypergraph {
            nodes: self.nodes().cloned().collect(),
            edges: self.edges().cloned().collect(),
            incidence: self.incidence().map(|(v, e)| (v.clone(), e.clone())).collect(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_edges.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_nodes.len()
    }

    /// `|V| + |E|`, the quantity every rewrite step decreases by one.
    pub fn size(&self) -> usize {
        self.node_count() + self.edge_count()
    }

    pub fn incidence_count(&self) -> usize {
        self.node_edges.values().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Nodes in ascending id order.
    pub fn nodes(&self) -> impl ExactSizeIterator<Item = &NodeId> + '_ {
        self.node_edges.keys()
    }

    /// Edges in ascending id order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = &EdgeId> + '_ {
        self.edge_nodes.keys()
    }

    /// Incidence pairs ordered by node, then edge.
    pub fn incidence(&self) -> impl Iterator<Item = (&NodeId, &EdgeId)> + '_ {
        self.node_edges
            .iter()
            .flat_map(|(v, es)| es.iter().map(move |e| (v, e)))
    }

    pub fn contains_node(&self, v: &str) -> bool {
        self.node_edges.contains_key(v)
    }

    pub fn contains_edge(&self, e: &str) -> bool {
        self.edge_nodes.contains_key(e)
    }

    pub fn is_incident(&self, v: &str, e: &str) -> bool {
        self.node_edges.get(v).is_some_and(|es| es.contains(e))
    }

    /// `E(v)`: the edges incident to `v`.
    pub fn incident_edges(&self, v: &str) -> Result<&BTreeSet<EdgeId>> {
        self.node_edges
            .get(v)
            .ok_or_else(|| Error::UnknownNode(NodeId(v.to_string())))
    }

    /// `V(e)`: the nodes incident to `e`.
    pub fn incident_nodes(&self, e: &str) -> Result<&BTreeSet<NodeId>> {
        self.edge_nodes
            .get(e)
            .ok_or_else(|| Error::UnknownEdge(EdgeId(e.to_string())))
    }

    pub(crate) fn node_entries(&self) -> impl Iterator<Item = (&NodeId, &BTreeSet<EdgeId>)> + Clone + '_ {
        self.node_edges.iter()
    }

    pub(crate) fn edge_entries(&self) -> impl Iterator<Item = (&EdgeId, &BTreeSet<NodeId>)> + Clone + '_ {
        self.edge_nodes.iter()
    }

    /// Returns a copy without `v` and without every incidence pair on `v`.
    pub fn remove_node(&self, v: &str) -> Result<Hypergraph> {
        let mut out = self.clone();
        let (_, edges) = out
            .node_edges
            .remove_entry(v)
            .ok_or_else(|| Error::UnknownNode(NodeId(v.to_string())))?;
        for e in &edges {
            if let Some(members) = out.edge_nodes.get_mut(e) {
                members.remove(v);
            }
        }
        Ok(out)
    }

    /// Returns a copy without `e` and without every incidence pair on `e`.
    pub fn remove_edge(&self, e: &str) -> Result<Hypergraph> {
        let mut out = self.clone();
        let (_, nodes) = out
            .edge_nodes
            .remove_entry(e)
            .ok_or_else(|| Error::UnknownEdge(EdgeId(e.to_string())))?;
        for v in &nodes {
            if let Some(incident) = out.node_edges.get_mut(v) {
                incident.remove(e);
            }
        }
        Ok(out)
    }

    /// Renames every node and edge. Both maps must be injective and cover
    /// all ids; ids outside the hypergraph are ignored.
    pub fn relabel(
        &self,
        node_map: &BTreeMap<NodeId, NodeId>,
        edge_map: &BTreeMap<EdgeId, EdgeId>,
    ) -> Result<Hypergraph> {
        let node = |v: &NodeId| node_map.get(v).cloned().ok_or_else(|| Error::UnknownNode(v.clone()));
        let edge = |e: &EdgeId| edge_map.get(e).cloned().ok_or_else(|| Error::UnknownEdge(e.clone()));
        let mut raw = RawHypergraph::default();
        for v in self.nodes() {
            raw.nodes.push(node(v)?);
        }
        for e in self.edges() {
            raw.edges.push(edge(e)?);
        }
        for (v, e) in self.incidence() {
            raw.incidence.push((node(v)?, edge(e)?));
        }
        Hypergraph::try_from(raw)
    }

    /// The 0/1 incidence matrix with rows in `node_order` and columns in
    /// `edge_order`.
    pub fn incidence_matrix(&self, node_order: &[NodeId], edge_order: &[EdgeId]) -> Result<IncidenceMatrix> {
        if !is_permutation(node_order, self.nodes()) {
            return Err(Error::NotAPermutation { role: "node" });
        }
        if !is_permutation(edge_order, self.edges()) {
            return Err(Error::NotAPermutation { role: "edge" });
        }
        let bits = node_order
            .iter()
            .map(|v| {
                let incident = &self.node_edges[v];
                edge_order.iter().map(|e| incident.contains(e)).collect()
            })
            .collect();
        Ok(IncidenceMatrix {
            node_order: node_order.to_vec(),
            edge_order: edge_order.to_vec(),
            bits,
        })
    }

    /// The incidence matrix with rows and columns in ascending id order.
    pub fn sorted_incidence_matrix(&self) -> IncidenceMatrix {
        let nodes: Vec<NodeId> = self.nodes().cloned().collect();
        let edges: Vec<EdgeId> = self.edges().cloned().collect();
        self.incidence_matrix(&nodes, &edges)
            .expect("sorted ids are a permutation")
    }

    /// Checks internal consistency. Values built through this API always
    /// return an empty list.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (v, es) in &self.node_edges {
            for e in es {
                match self.edge_nodes.get(e) {
                    None => out.push(Violation::MissingEdge {
                        node: v.clone(),
                        edge: e.clone(),
                    }),
                    Some(vs) if !vs.contains(v) => out.push(Violation::Asymmetric {
                        node: v.clone(),
                        edge: e.clone(),
                    }),
                    Some(_) => {}
                }
            }
        }
        for (e, vs) in &self.edge_nodes {
            for v in vs {
                match self.node_edges.get(v) {
                    None => out.push(Violation::MissingNode {
                        node: v.clone(),
                        edge: e.clone(),
                    }),
                    Some(es) if !es.contains(e) => out.push(Violation::Asymmetric {
                        node: v.clone(),
                        edge: e.clone(),
                    }),
                    Some(_) => {}
                }
            }
        }
        out
    }
}

fn is_permutation<'a, T: Ord + 'a>(order: &[T], ids: impl ExactSizeIterator<Item = &'a T>) -> bool {
    if order.len() != ids.len() {
        return false;
    }
    let mut sorted: Vec<&T> = order.iter().collect();
    sorted.sort();
    sorted.into_iter().eq(ids)
}

/// A row-major 0/1 matrix: rows are nodes, columns are edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub node_order: Vec<NodeId>,
    pub edge_order: Vec<EdgeId>,
    pub bits: Vec<Vec<bool>>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.node_order.len()
    }

    pub fn cols(&self) -> usize {
        self.edge_order.len()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row][col]
    }

    /// Rebuilds the hypergraph the matrix describes.
    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        if self.bits.len() != self.rows() || self.bits.iter().any(|r| r.len() != self.cols()) {
            return Err(Error::Invalid("matrix dimensions do not match its orders".into()));
        }
        let mut raw = RawHypergraph {
            nodes: self.node_order.clone(),
            edges: self.edge_order.clone(),
            incidence: Vec::new(),
        };
        for (v, row) in self.node_order.iter().zip(&self.bits) {
            for (e, &bit) in self.edge_order.iter().zip(row) {
                if bit {
                    raw.incidence.push((v.clone(), e.clone()));
                }
            }
        }
        Hypergraph::try_from(raw)
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.bits {
            let line: String = row.iter().map(|&b| if b { '1' } else { '0' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
