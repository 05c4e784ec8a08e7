//! Edge-domination and node-domination rewriting.
//!
//! Edge-domination deletes an edge `e'` when another edge `e` has
//! `V(e) ⊆ V(e')`. Node-domination deletes a node `v` when another node `v'`
//! has `E(v) ⊆ E(v')`. Inclusions are not strict: twins dominate each other.
//! Every step deletes exactly one object, so any reduction terminates after
//! at most `|V| + |E|` steps.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, NodeId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleKind {
    Node,
    Edge,
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleKind::Node => "node",
            RuleKind::Edge => "edge",
        })
    }
}

/// One rewrite step: the object deleted and the object that justifies it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleApplication {
    /// `V(witness) ⊆ V(removed)`, so `removed` goes.
    EdgeDomination { removed: EdgeId, witness: EdgeId },
    /// `E(removed) ⊆ E(witness)`, so `removed` goes.
    NodeDomination { removed: NodeId, witness: NodeId },
}

impl RuleApplication {
    pub fn kind(&self) -> RuleKind {
        match self {
            RuleApplication::EdgeDomination { .. } => RuleKind::Edge,
            RuleApplication::NodeDomination { .. } => RuleKind::Node,
        }
    }

    pub fn removed(&self) -> &str {
        match self {
            RuleApplication::EdgeDomination { removed, .. } => removed.as_str(),
            RuleApplication::NodeDomination { removed, .. } => removed.as_str(),
        }
    }

    pub fn witness(&self) -> &str {
        match self {
            RuleApplication::EdgeDomination { witness, .. } => witness.as_str(),
            RuleApplication::NodeDomination { witness, .. } => witness.as_str(),
        }
    }

    /// Checks the rule's inclusion against `h`.
    pub fn check(&self, h: &Hypergraph) -> Result<()> {
        let fail = |reason: String| Error::InapplicableRule {
            rule: self.to_string(),
            reason,
        };
        match self {
            RuleApplication::EdgeDomination { removed, witness } => {
                if removed == witness {
                    return Err(fail("removed and witness are the same edge".into()));
                }
                let big = h.incident_nodes(removed.as_str())?;
                let small = h.incident_nodes(witness.as_str())?;
                if !small.is_subset(big) {
                    return Err(fail(format!(
                        "V({witness}) = {} is not a subset of V({removed}) = {}",
                        show(small),
                        show(big)
                    )));
                }
            }
            RuleApplication::NodeDomination { removed, witness } => {
                if removed == witness {
                    return Err(fail("removed and witness are the same node".into()));
                }
                let small = h.incident_edges(removed.as_str())?;
                let big = h.incident_edges(witness.as_str())?;
                if !small.is_subset(big) {
                    return Err(fail(format!(
                        "E({removed}) = {} is not a subset of E({witness}) = {}",
                        show(small),
                        show(big)
                    )));
                }
            }
        }
        Ok(())
    }
}

fn show<T: fmt::Display>(set: &BTreeSet<T>) -> String {
    let items: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// Trace line form: `<kind> remove=<id> witness=<id>`.
impl fmt::Display for RuleApplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} remove={} witness={}",
            self.kind(),
            self.removed(),
            self.witness()
        )
    }
}

impl FromStr for RuleApplication {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let bad = || Error::Parameter(format!("malformed trace line {line:?}"));
        let mut words = line.split_whitespace();
        let kind = words.next().ok_or_else(bad)?;
        let removed = words.next().and_then(|w| w.strip_prefix("remove=")).ok_or_else(bad)?;
        let witness = words.next().and_then(|w| w.strip_prefix("witness=")).ok_or_else(bad)?;
        if words.next().is_some() {
            return Err(bad());
        }
        match kind {
            "node" => Ok(RuleApplication::NodeDomination {
                removed: NodeId::new(removed)?,
                witness: NodeId::new(witness)?,
            }),
            "edge" => Ok(RuleApplication::EdgeDomination {
                removed: EdgeId::new(removed)?,
                witness: EdgeId::new(witness)?,
            }),
            _ => Err(bad()),
        }
    }
}

/// JSON shape: `{"kind": "node", "remove": "v1", "witness": "v2"}`.
#[derive(Serialize, Deserialize)]
struct RuleRecord {
    kind: RuleKind,
    remove: String,
    witness: String,
}

impl Serialize for RuleApplication {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RuleRecord {
            kind: self.kind(),
            remove: self.removed().to_string(),
            witness: self.witness().to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RuleApplication {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = RuleRecord::deserialize(d)?;
        let rule = match r.kind {
            RuleKind::Node => RuleApplication::NodeDomination {
                removed: NodeId::new(r.remove).map_err(D::Error::custom)?,
                witness: NodeId::new(r.witness).map_err(D::Error::custom)?,
            },
            RuleKind::Edge => RuleApplication::EdgeDomination {
                removed: EdgeId::new(r.remove).map_err(D::Error::custom)?,
                witness: EdgeId::new(r.witness).map_err(D::Error::custom)?,
            },
        };
        Ok(rule)
    }
}

/// All applicable edge-domination rules, ordered by `(removed, witness)`.
pub fn find_edge_dominations(h: &Hypergraph) -> Vec<RuleApplication> {
    let mut out = Vec::new();
    for (removed, big) in h.edge_entries() {
        for (witness, small) in h.edge_entries() {
            if removed != witness && small.is_subset(big) {
                out.push(RuleApplication::EdgeDomination {
                    removed: removed.clone(),
                    witness: witness.clone(),
                });
            }
        }
    }
    out
}

/// All applicable node-domination rules, ordered by `(removed, witness)`.
pub fn find_node_dominations(h: &Hypergraph) -> Vec<RuleApplication> {
    let mut out = Vec::new();
    for (removed, small) in h.node_entries() {
        for (witness, big) in h.node_entries() {
            if removed != witness && small.is_subset(big) {
                out.push(RuleApplication::NodeDomination {
                    removed: removed.clone(),
                    witness: witness.clone(),
                });
            }
        }
    }
    out
}

/// Node rules followed by edge rules.
pub fn find_all(h: &Hypergraph) -> Vec<RuleApplication> {
    let mut rules = find_node_dominations(h);
    rules.extend(find_edge_dominations(h));
    rules
}

/// True iff no rule applies.
pub fn is_minimal(h: &Hypergraph) -> bool {
    !has_subset_pair(h.node_entries()) && !has_subset_pair(h.edge_entries())
}

fn has_subset_pair<'a, K: Eq + 'a, T: Ord + 'a>(
    entries: impl Iterator<Item = (&'a K, &'a BTreeSet<T>)> + Clone,
) -> bool {
    entries
        .clone()
        .any(|(a, sa)| entries.clone().any(|(b, sb)| a != b && sa.is_subset(sb)))
}

/// Applies `rule` after checking that it is applicable to `h`.
pub fn apply(h: &Hypergraph, rule: &RuleApplication) -> Result<Hypergraph> {
    rule.check(h)?;
    match rule {
        RuleApplication::EdgeDomination { removed, .. } => h.remove_edge(removed.as_str()),
        RuleApplication::NodeDomination { removed, .. } => h.remove_node(removed.as_str()),
    }
}

/// How [`step`] and [`reduce`] choose among applicable rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strategy {
    /// First node rule in `(removed, witness)` order, else first edge rule.
    LexNodeFirst,
    /// First edge rule, else first node rule.
    LexEdgeFirst,
    /// Uniform over node rules followed by edge rules, drawn from a ChaCha8
    /// stream seeded with the given value. One stream covers a whole
    /// reduction.
    Random(u64),
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::LexNodeFirst => f.write_str("lex-node-first"),
            Strategy::LexEdgeFirst => f.write_str("lex-edge-first"),
            Strategy::Random(seed) => write!(f, "random({seed})"),
        }
    }
}

/// Rule selection state for one reduction.
pub struct Selector {
    strategy: Strategy,
    rng: Option<ChaCha8Rng>,
}

impl Selector {
    pub fn new(strategy: Strategy) -> Self {
        let rng = match strategy {
            Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        Selector { strategy, rng }
    }

    /// Picks the next rule, or `None` if `h` is minimal.
    pub fn choose(&mut self, h: &Hypergraph) -> Option<RuleApplication> {
        match self.strategy {
            Strategy::LexNodeFirst => find_node_dominations(h)
                .into_iter()
                .next()
                .or_else(|| find_edge_dominations(h).into_iter().next()),
            Strategy::LexEdgeFirst => find_edge_dominations(h)
                .into_iter()
                .next()
                .or_else(|| find_node_dominations(h).into_iter().next()),
            Strategy::Random(_) => {
                let mut rules = find_all(h);
                if rules.is_empty() {
                    return None;
                }
                let rng = self.rng.as_mut().expect("random strategy has a generator");
                let i = rng.gen_range(0..rules.len() as u64) as usize;
                Some(rules.swap_remove(i))
            }
        }
    }

    pub fn step(&mut self, h: &Hypergraph) -> Option<(RuleApplication, Hypergraph)> {
        let rule = self.choose(h)?;
        let next = apply(h, &rule).expect("selected rules are applicable");
        Some((rule, next))
    }
}

/// One rewrite step under `strategy`, or `None` if `h` is minimal.
pub fn step(h: &Hypergraph, strategy: Strategy) -> Option<(RuleApplication, Hypergraph)> {
    Selector::new(strategy).step(h)
}

/// The ordered rule applications of one reduction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReductionTrace {
    pub steps: Vec<RuleApplication>,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn kinds(&self) -> impl Iterator<Item = RuleKind> + '_ {
        self.steps.iter().map(RuleApplication::kind)
    }

    /// Re-applies every step to `start`, checking each one.
    pub fn replay(&self, start: &Hypergraph) -> Result<Hypergraph> {
        self.steps.iter().try_fold(start.clone(), |h, r| apply(&h, r))
    }

    /// Parses the one-step-per-line form written by `Display`.
    pub fn parse(text: &str) -> Result<Self> {
        let steps = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<_>>()?;
        Ok(ReductionTrace { steps })
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Rewrites `h` until it is minimal.
pub fn reduce(h: &Hypergraph, strategy: Strategy) -> (Hypergraph, ReductionTrace) {
    let mut selector = Selector::new(strategy);
    let mut current = h.clone();
    let mut trace = ReductionTrace::default();
    while let Some((rule, next)) = selector.step(&current) {
        trace.steps.push(rule);
        current = next;
    }
    (current, trace)
}
